//! Curated registry of varieties, surfaces and cycle classes with their
//! positivity verdicts.
//!
//! Verdicts that the toolkit cannot decide by computation (effectivity,
//! bigness, extremality, Lagrangian status) are stored as data, each flag
//! tied to a provenance anchor that resolves to a formal statement in the
//! registry below. Computed facts live in the other modules; the catalog
//! never pretends to have computed these.

use crate::error::Error;
use crate::fano::FanoClass2;
use crate::rational::{format_rational, rat, Rational};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagKind {
    Effective,
    Nef,
    Big,
    NotBig,
    Extremal,
    Lagrangian,
    NoEffectiveMultiple,
}

impl FlagKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FlagKind::Effective => "effective",
            FlagKind::Nef => "nef",
            FlagKind::Big => "big",
            FlagKind::NotBig => "not-big",
            FlagKind::Extremal => "extremal",
            FlagKind::Lagrangian => "lagrangian",
            FlagKind::NoEffectiveMultiple => "no-effective-multiple",
        }
    }
}

/// A positivity verdict with an optional genericity qualifier (recorded
/// verbatim, never interpreted) and its provenance anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub kind: FlagKind,
    pub qualifier: Option<&'static str>,
    pub anchor: &'static str,
}

impl Flag {
    fn new(kind: FlagKind, anchor: &'static str) -> Self {
        Flag {
            kind,
            qualifier: None,
            anchor,
        }
    }

    fn qualified(kind: FlagKind, qualifier: &'static str, anchor: &'static str) -> Self {
        Flag {
            kind,
            qualifier: Some(qualifier),
            anchor,
        }
    }
}

/// How an entry's class is recorded: coordinates in the (g², c) basis, a
/// vector in a declared lattice basis, or a symbolic tag when the class is
/// not determined by the registry's data.
#[derive(Debug, Clone, PartialEq)]
pub enum ClassExpr {
    Fano(FanoClass2),
    LatticeVector(Vec<Rational>),
    Symbolic(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub variety: &'static str,
    pub object: String,
    pub class_expr: ClassExpr,
    pub flags: Vec<Flag>,
    pub provenance: &'static str,
}

pub const KNOWN_VARIETIES: [&str; 2] = ["fano-lines", "kummer-4fold"];

/// Formal statement behind a provenance anchor; `None` for unknown anchors.
pub fn provenance_statement(anchor: &str) -> Option<&'static str> {
    let statement = match anchor {
        "fano.intersection-numbers" => {
            "on X = F(Y): g^4 = 108, g^2.c = 45, c^2 = 27 in the basis (g^2, c)"
        }
        "fano.lines-meeting-line" => {
            "[lines meeting a fixed general line l] = (1/3)(g^2 - c)"
        }
        "fano.second-type" => {
            "[lines of second type, normal bundle O(1)^2 + O(-1)] = 5(g^2 - c)"
        }
        "fano.z-h" => {
            "[Z_H] = c for Z_H = {lines contained in a general hyperplane section}; \
             c is effective, extremal and not big"
        }
        "fano.f2-v" => {
            "[F_2(V)] = 63c for the planes of a general cubic fivefold V with \
             hyperplane section Y, embedded by intersecting with Y"
        }
        "fano.c2" => {
            "c2(X) = 5g^2 - 8c; positive against every surface class for very \
             general Y; no multiple of c2(X) is effective"
        }
        "fano.p-dual" => {
            "for Y containing a plane P, the dual plane P^v = {lines in P} in \
             F(Y) is Lagrangian and spans an extremal ray"
        }
        "fano.plane-anomaly" => {
            "for Y containing a plane P: c2(X).[P] = -3, so c2(X) is not nef \
             on such special Y (the class of P is recorded symbolically only)"
        }
        "kummer.w-tau" => {
            "W_tau = {subschemes supported entirely at tau}, tau a 3-torsion \
             point; each W_tau is isomorphic to P(1,1,3) and extremal for very \
             general X"
        }
        "kummer.z-tau" => {
            "Z_tau = the residual limit component of the surfaces Y_p as \
             p -> tau in A[3]; extremal for very general X"
        }
        "kummer.c2-effective" => {
            "3c2(X) = sum over tau in A[3] of [Z_tau]; hence 3c2(X) is \
             effective, and c2(X) is not big"
        }
        _ => return None,
    };
    Some(statement)
}

fn fano_entries() -> Vec<CatalogEntry> {
    let third = rat(1, 3);
    vec![
        CatalogEntry {
            variety: "fano-lines",
            object: "lines meeting a fixed line".into(),
            class_expr: ClassExpr::Fano(FanoClass2::new(third.clone(), -third)),
            flags: vec![Flag::new(FlagKind::Effective, "fano.lines-meeting-line")],
            provenance: "fano.lines-meeting-line",
        },
        CatalogEntry {
            variety: "fano-lines",
            object: "lines of second type".into(),
            class_expr: ClassExpr::Fano(FanoClass2::from_ints(5, -5)),
            flags: vec![Flag::new(FlagKind::Effective, "fano.second-type")],
            provenance: "fano.second-type",
        },
        CatalogEntry {
            variety: "fano-lines",
            object: "hyperplane surface Z_H".into(),
            class_expr: ClassExpr::Fano(FanoClass2::from_ints(0, 1)),
            flags: vec![
                Flag::new(FlagKind::Effective, "fano.z-h"),
                Flag::qualified(FlagKind::Extremal, "very general", "fano.z-h"),
                Flag::qualified(FlagKind::NotBig, "very general", "fano.z-h"),
                Flag::new(FlagKind::Lagrangian, "fano.z-h"),
            ],
            provenance: "fano.z-h",
        },
        CatalogEntry {
            variety: "fano-lines",
            object: "planes surface F2(V)".into(),
            class_expr: ClassExpr::Fano(FanoClass2::from_ints(0, 63)),
            flags: vec![Flag::new(FlagKind::Effective, "fano.f2-v")],
            provenance: "fano.f2-v",
        },
        CatalogEntry {
            variety: "fano-lines",
            object: "c2".into(),
            class_expr: ClassExpr::Fano(FanoClass2::from_ints(5, -8)),
            flags: vec![
                Flag::qualified(FlagKind::Nef, "very general", "fano.c2"),
                Flag::new(FlagKind::NoEffectiveMultiple, "fano.c2"),
            ],
            provenance: "fano.c2",
        },
        CatalogEntry {
            variety: "fano-lines",
            object: "dual plane P-dual".into(),
            class_expr: ClassExpr::Symbolic("lines contained in a plane P of a special Y".into()),
            flags: vec![
                Flag::qualified(FlagKind::Extremal, "Y contains a plane", "fano.p-dual"),
                Flag::qualified(FlagKind::Lagrangian, "Y contains a plane", "fano.p-dual"),
            ],
            provenance: "fano.p-dual",
        },
        CatalogEntry {
            variety: "fano-lines",
            object: "plane pairing anomaly".into(),
            class_expr: ClassExpr::Symbolic("c2 . [P] = -3 when Y contains a plane P".into()),
            flags: vec![],
            provenance: "fano.plane-anomaly",
        },
    ]
}

fn kummer_entries() -> Vec<CatalogEntry> {
    let mut entries = Vec::with_capacity(163);
    let torsion = || {
        (0..81).map(|idx| {
            (
                idx / 27 % 3,
                idx / 9 % 3,
                idx / 3 % 3,
                idx % 3,
            )
        })
    };
    for (a, b, c, d) in torsion() {
        entries.push(CatalogEntry {
            variety: "kummer-4fold",
            object: format!("W_({a},{b},{c},{d})"),
            class_expr: ClassExpr::Symbolic(format!(
                "[W_tau], tau = ({a},{b},{c},{d}) in A[3]; W_tau = P(1,1,3)"
            )),
            flags: vec![
                Flag::new(FlagKind::Effective, "kummer.w-tau"),
                Flag::qualified(FlagKind::Extremal, "very general", "kummer.w-tau"),
            ],
            provenance: "kummer.w-tau",
        });
    }
    for (a, b, c, d) in torsion() {
        entries.push(CatalogEntry {
            variety: "kummer-4fold",
            object: format!("Z_({a},{b},{c},{d})"),
            class_expr: ClassExpr::Symbolic(format!(
                "[Z_tau], tau = ({a},{b},{c},{d}) in A[3]"
            )),
            flags: vec![
                Flag::new(FlagKind::Effective, "kummer.z-tau"),
                Flag::qualified(FlagKind::Extremal, "very general", "kummer.z-tau"),
            ],
            provenance: "kummer.z-tau",
        });
    }
    entries.push(CatalogEntry {
        variety: "kummer-4fold",
        object: "3*c2".into(),
        class_expr: ClassExpr::Symbolic("3*c2 = sum of [Z_tau] over tau in A[3]".into()),
        flags: vec![
            Flag::new(FlagKind::Effective, "kummer.c2-effective"),
            Flag::new(FlagKind::NotBig, "kummer.c2-effective"),
        ],
        provenance: "kummer.c2-effective",
    });
    entries
}

/// Built-in entries for a variety; unknown identifiers list what exists.
pub fn list_entries(variety: &str) -> Result<Vec<CatalogEntry>, Error> {
    match variety {
        "fano-lines" => Ok(fano_entries()),
        "kummer-4fold" => Ok(kummer_entries()),
        _ => Err(Error::UnknownVariety {
            got: variety.to_string(),
            known: KNOWN_VARIETIES.join(", "),
        }),
    }
}

/// Single entry lookup by object name.
pub fn show_entry(variety: &str, object: &str) -> Result<CatalogEntry, Error> {
    list_entries(variety)?
        .into_iter()
        .find(|e| e.object == object)
        .ok_or_else(|| Error::UnknownObject {
            variety: variety.to_string(),
            got: object.to_string(),
        })
}

impl ClassExpr {
    pub fn to_json(&self) -> Value {
        match self {
            ClassExpr::Fano(f) => json!({
                "basis": ["g2", "c"],
                "coords": [format_rational(&f.g2), format_rational(&f.c)],
                "rendered": f.to_string(),
            }),
            ClassExpr::LatticeVector(v) => json!({
                "vector": v.iter().map(format_rational).collect::<Vec<_>>(),
            }),
            ClassExpr::Symbolic(s) => json!({ "symbolic": s }),
        }
    }
}

impl Flag {
    pub fn to_json(&self) -> Value {
        json!({
            "anchor": self.anchor,
            "kind": self.kind.as_str(),
            "qualifier": self.qualifier,
        })
    }
}

impl CatalogEntry {
    pub fn to_json(&self) -> Value {
        json!({
            "class": self.class_expr.to_json(),
            "flags": self.flags.iter().map(Flag::to_json).collect::<Vec<_>>(),
            "object": self.object,
            "provenance": {
                "anchor": self.provenance,
                "statement": provenance_statement(self.provenance),
            },
            "variety": self.variety,
        })
    }
}
