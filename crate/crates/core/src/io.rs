//! JSON file formats.
//!
//! ```text
//! group     {"kind":"table","mul":[[..],..]}
//!           {"kind":"presentation","generators":2,"relators":[[1,1],[1,2,-1,-2]]}
//! complex   {"vertices":n,"edges":[[u,v],..],"triangles":[[e1,e2,e3],..]}
//! module    {"factors":[..],"action":{"matrices":[[[..]],..]}}
//! cochain   {"entries":[[[p,q,r],[a,..]],..]}
//! two-type  {"pi1":group,"pi2":module,"k":cochain}
//! crossed   {"g1":group,"g0":group,"d":[..],"action":[[..],..]}
//! ```
//!
//! Module matrices are listed per element of a table group and per
//! generator of a presented one; a missing `action` means the trivial
//! action. Relators use 1-based generator indices, negative for inverses.

use serde::{Deserialize, Serialize};

use crate::algebra::{GroupTable, Presentation, SourceGroup};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::spaces::{realize_presentation, validate_two_type, Complex2, PModule, RawTwoType, TwoType};
use crate::xmod::CrossedModule;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupFile {
    Table { mul: Vec<Vec<usize>> },
    Presentation { generators: usize, relators: Vec<Vec<i32>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default)]
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub matrices: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub factors: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    pub entries: Vec<(Vec<usize>, Vec<i64>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoTypeFile {
    pub pi1: GroupFile,
    pub pi2: ModuleFile,
    #[serde(default = "empty_cochain")]
    pub k: CochainFile,
}

fn empty_cochain() -> CochainFile {
    CochainFile { entries: vec![] }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedFile {
    pub g1: GroupFile,
    pub g0: GroupFile,
    pub d: Vec<usize>,
    pub action: Vec<Vec<usize>>,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::malformed(e.to_string()))
}

impl GroupFile {
    pub fn into_source(self) -> Result<SourceGroup> {
        Ok(match self {
            GroupFile::Table { mul } => SourceGroup::Table(GroupTable::validate(mul)?),
            GroupFile::Presentation { generators, relators } => {
                SourceGroup::Presentation(Presentation::new(generators, relators)?)
            }
        })
    }

    pub fn from_table(g: &GroupTable) -> Self {
        GroupFile::Table { mul: g.rows() }
    }
}

/// A group as a table; presentations are realized where possible.
pub fn table_of(source: &SourceGroup, caps: &Caps) -> Result<GroupTable> {
    match source {
        SourceGroup::Table(t) => Ok(t.clone()),
        SourceGroup::Presentation(p) => Ok(realize_presentation(p, caps)?.0),
    }
}

pub fn read_group(text: &str) -> Result<SourceGroup> {
    parse::<GroupFile>(text)?.into_source()
}

pub fn read_complex(text: &str) -> Result<Complex2> {
    let f: ComplexFile = parse(text)?;
    Complex2::new(f.vertices, f.edges, f.triangles)
}

/// Either a group file or a complex file, told apart by the `vertices` key.
pub enum GroupOrComplex {
    Group(SourceGroup),
    Complex(Complex2),
}

pub fn read_group_or_complex(text: &str) -> Result<GroupOrComplex> {
    let v: serde_json::Value = parse(text)?;
    if v.get("vertices").is_some() {
        Ok(GroupOrComplex::Complex(read_complex(text)?))
    } else {
        Ok(GroupOrComplex::Group(read_group(text)?))
    }
}

/// A module over `p` (a table group) from a module file.
pub fn read_module(text: &str, p: &GroupTable) -> Result<PModule> {
    let f: ModuleFile = parse(text)?;
    let m = match f.action {
        None => PModule::trivial(p.order(), f.factors)?,
        Some(a) => PModule::new(p, f.factors, &a.matrices)?,
    };
    m.check_invertible()?;
    Ok(m)
}

pub fn read_two_type(text: &str, caps: &Caps) -> Result<TwoType> {
    let f: TwoTypeFile = parse(text)?;
    let raw = RawTwoType {
        pi1: f.pi1.into_source()?,
        factors: f.pi2.factors,
        action: f.pi2.action.map(|a| a.matrices),
        k: f.k.entries,
    };
    validate_two_type(&raw, caps)
}

pub fn read_crossed(text: &str, caps: &Caps) -> Result<CrossedModule> {
    let f: CrossedFile = parse(text)?;
    let g1 = table_of(&f.g1.into_source()?, caps)?;
    let g0 = table_of(&f.g0.into_source()?, caps)?;
    CrossedModule::validate(g1, g0, f.d, f.action)
}

/// The file form of a 2-type with table `π₁`.
pub fn two_type_file(t: &TwoType) -> TwoTypeFile {
    let matrices: Vec<Vec<Vec<i64>>> = (0..t.pi1.order())
        .map(|p| t.pi2.matrix(p).iter().map(|row| row.iter().map(|&x| x as i64).collect()).collect())
        .collect();
    TwoTypeFile {
        pi1: GroupFile::from_table(&t.pi1),
        pi2: ModuleFile {
            factors: t.pi2.factors().to_vec(),
            action: (!t.pi2.is_trivial_action()).then_some(ActionFile { matrices }),
        },
        k: CochainFile {
            entries: t
                .k
                .entries()
                .into_iter()
                .map(|(tuple, v)| (tuple, v.into_iter().map(|x| x as i64).collect()))
                .collect(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_formats() {
        let t = read_group(r#"{"kind":"table","mul":[[0,1],[1,0]]}"#).unwrap();
        assert!(matches!(t, SourceGroup::Table(ref g) if g.order() == 2));
        let p = read_group(r#"{"kind":"presentation","generators":2,"relators":[[1,1],[2,2],[1,2,1,-2]]}"#).unwrap();
        assert!(matches!(p, SourceGroup::Presentation(ref q) if q.n_generators() == 2));
        assert!(read_group(r#"{"kind":"table","mul":[[0,1],[0,1]]}"#).is_err());
        let err = read_group("{\"kind\":\"table\",\n\"mul\":[[0,1]").unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }

    #[test]
    fn two_type_round_trip() {
        let text = r#"{"pi1":{"kind":"table","mul":[[0,1],[1,0]]},
                       "pi2":{"factors":[3],"action":{"matrices":[[[1]],[[-1]]]}},
                       "k":{"entries":[]}}"#;
        let t = read_two_type(text, &Caps::default()).unwrap();
        assert_eq!(t.pi2.act(1, &[1]), vec![2]);
        let again = serde_json::to_string(&two_type_file(&t)).unwrap();
        assert_eq!(read_two_type(&again, &Caps::default()).unwrap(), t);
    }

    #[test]
    fn complex_or_group() {
        assert!(matches!(
            read_group_or_complex(r#"{"vertices":3,"edges":[[0,1],[1,2],[0,2]]}"#).unwrap(),
            GroupOrComplex::Complex(_)
        ));
        assert!(matches!(
            read_group_or_complex(r#"{"kind":"presentation","generators":1,"relators":[]}"#).unwrap(),
            GroupOrComplex::Group(_)
        ));
    }

    #[test]
    fn crossed_file() {
        let text = r#"{"g1":{"kind":"table","mul":[[0,1],[1,0]]},"g0":{"kind":"table","mul":[[0,1],[1,0]]},
                       "d":[0,0],"action":[[0,1],[0,1]]}"#;
        let x = read_crossed(text, &Caps::default()).unwrap();
        assert_eq!(x.ker_coker().ker.order(), 2);
    }
}
