//! Bundled groups and tables, embedded at compile time.
//!
//! The D4 x D4 table on the Vámos points and the symmetric-group tables
//! are generated; [`generated_assets`] reproduces their file contents.

use crate::error::Result;
use crate::groups::{product_table, symmetric_table, CharacterTable, PermGroup};
use crate::matroid::MatroidFile;

pub const D4_TABLE: &str = include_str!("../../../assets/d4.json");
pub const D4_GROUP: &str = include_str!("../../../assets/d4_group.json");

/// The automorphism group of the Vámos matroid used throughout: one D4 on
/// `{1,2,7,8}` and one on `{3,4,5,6}`.
pub fn vamos_group() -> PermGroup {
    PermGroup::from_json(VAMOS_GROUP).expect("bundled group parses")
}

const VAMOS_GROUP: &str = r#"{"degree":8,"generators":["(1,2)","(1,7)(2,8)","(3,4)","(3,5)(4,6)"]}"#;

/// Sends the points of `D4 x D4` (first factor on 1..4, second on 5..8)
/// to the Vámos points, 0-based.
pub const VAMOS_RELABEL: [usize; 8] = [0, 1, 6, 7, 2, 3, 4, 5];

pub fn d4_table() -> CharacterTable {
    CharacterTable::from_json(D4_TABLE).expect("bundled D4 table parses")
}

/// `D4 x D4` with representatives acting on the Vámos points.
pub fn vamos_table() -> Result<CharacterTable> {
    let d4 = d4_table();
    product_table(&d4, &d4).relabel(&VAMOS_RELABEL, 8)
}

/// `(file name, contents)` of every generated asset.
pub fn generated_assets() -> Result<Vec<(String, String)>> {
    let mut out = vec![
        ("d4xd4.json".to_string(), pretty(&vamos_table()?.to_json())),
        ("vamos_w.json".to_string(), pretty(&vamos_group().to_json())),
        ("vamos.json".to_string(), pretty(&serde_json::to_string(&MatroidFile::Vamos)?)),
    ];
    for n in 1..=8 {
        out.push((format!("s{n}_table.json"), pretty(&symmetric_table(n).to_json())));
    }
    Ok(out)
}

fn pretty(json: &str) -> String {
    let value: serde_json::Value = serde_json::from_str(json).expect("valid json");
    let mut s = serde_json::to_string_pretty(&value).expect("serializes");
    s.push('\n');
    s
}
