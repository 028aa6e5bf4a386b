//! JSON encodings. Rationals are `"p/q"` strings, reduced with `q > 0`.

use serde_json::{json, Value};

use cherednik::classify::{
    BlockTarget, BlockingSequence, DiagCertificate, DiagVerdict, RemovableStat, UnitaryCertificate, UnitaryVerdict,
};
use cherednik::gamma::{FoldCase, NearFold, PQPair, WeightEntry};
use cherednik::params::{ExtendedNat, Parameter};
use cherednik::rational::{format_rational, Rational};
use cherednik::shapes::Cell;

pub const CLASSIFY_SCHEMA: &str = "cherednik.classify/1";
pub const ORACLE_SCHEMA: &str = "cherednik.oracle/1";
pub const GAMMA_SCHEMA: &str = "cherednik.gamma/1";

pub fn rational(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn cell(b: &Cell) -> Value {
    json!({ "component": b.component, "row": b.row, "col": b.col, "content": b.content() })
}

pub fn ext(k: &ExtendedNat) -> Value {
    match k.finite() {
        Some(v) => json!(v),
        None => json!("inf"),
    }
}

pub fn param(c: &Parameter) -> Value {
    json!({
        "r": c.r(),
        "c0": rational(c.c0()),
        "d": c.d_vec().iter().map(rational).collect::<Vec<_>>(),
    })
}

pub fn pq(p: &PQPair) -> Value {
    json!({ "p": p.p, "q": p.q, "degree": p.degree() })
}

pub fn weight(w: &[WeightEntry]) -> Value {
    Value::Array(w.iter().map(|e| json!({ "z": rational(&e.z), "zeta": e.zeta })).collect())
}

fn stat(s: &RemovableStat) -> Value {
    json!({ "box": cell(&s.cell), "k": ext(&s.k), "l": ext(&s.l), "passes": s.passes() })
}

pub fn near_fold(nf: &NearFold) -> Value {
    let case = match nf.case {
        FoldCase::Phi => json!({ "kind": "phi" }),
        FoldCase::Reflection { i } => json!({ "kind": "reflection", "i": i }),
    };
    json!({
        "pq": pq(&nf.pq),
        "case": case,
        "b1": nf.b1,
        "b2": nf.b2,
        "b3": nf.b3,
        "k": nf.k,
        "image": pq(&nf.image),
        "fold_at": nf.fold_at,
        "degree": nf.degree(),
    })
}

pub fn diag_certificate(v: &DiagVerdict) -> Value {
    match &v.certificate {
        DiagCertificate::C0Zero => json!({ "kind": "c0_zero" }),
        DiagCertificate::Stats { table, near_fold: nf } => json!({
            "kind": "stats",
            "table": table.iter().map(stat).collect::<Vec<_>>(),
            "near_fold": nf.as_ref().map(near_fold),
        }),
    }
}

pub fn blocking(seq: &BlockingSequence) -> Value {
    let target = match &seq.target {
        BlockTarget::Char { b, j } => json!({ "kind": "char", "box": cell(b), "j": j }),
        BlockTarget::Pair { b, b2 } => json!({ "kind": "pair", "box": cell(b), "box2": cell(b2) }),
    };
    json!({
        "target": target,
        "boxes": seq.boxes.iter().map(cell).collect::<Vec<_>>(),
        "l": seq.l,
    })
}

pub fn unitary_certificate(v: &UnitaryVerdict) -> Value {
    let mut out = match &v.certificate {
        UnitaryCertificate::C0Zero { checked } => json!({
            "kind": "c0_zero",
            "checked": checked
                .iter()
                .map(|(i, j, k)| json!({ "i": i, "j": j, "k": k }))
                .collect::<Vec<_>>(),
        }),
        UnitaryCertificate::NotDiagonalizable(_) => json!({ "kind": "not_diagonalizable" }),
        UnitaryCertificate::Blocked { sequences } => json!({
            "kind": "blocked",
            "sequences": sequences.iter().map(blocking).collect::<Vec<_>>(),
        }),
        UnitaryCertificate::PairUnblocked { b1, b2, m, witness } => json!({
            "kind": "pair_unblocked",
            "b1": cell(b1),
            "b2": cell(b2),
            "m": m,
            "witness": pq(witness),
        }),
        UnitaryCertificate::CharUnblocked { b, j, m, witness } => json!({
            "kind": "char_unblocked",
            "box": cell(b),
            "j": j,
            "m": m,
            "witness": pq(witness),
        }),
    };
    out["refutation_degree"] = json!(v.refutation_degree());
    out
}

/// The full `classify` document.
pub fn classify(shape_text: &str, c: &Parameter, diag: &DiagVerdict, unit: &UnitaryVerdict) -> Value {
    json!({
        "schema": CLASSIFY_SCHEMA,
        "input": { "shape": shape_text, "param": param(c) },
        "diagonalizable": diag.diagonalizable,
        "unitary": unit.unitary,
        "reduced": {
            "flipped": diag.flipped,
            "shape": diag.shape.to_string(),
            "param": param(&diag.param),
        },
        "certificates": {
            "diagonalizable": diag_certificate(diag),
            "unitary": unitary_certificate(unit),
        },
    })
}
