//! Re-validation of a `classify` document, independent of the run that
//! produced it: every claim is recomputed or checked from its witness.

use anyhow::{anyhow, bail, ensure, Context, Result};
use serde_json::Value;

use cherednik::classify::{
    char_needs_blocking, check_violation, pair_needs_blocking, reduce_sign, verify_blocking, BlockTarget,
    BlockingSequence, ViolationTarget,
};
use cherednik::gamma::{verify_near_fold, FoldCase, NearFold, PQPair};
use cherednik::params::{ExtendedNat, Parameter};
use cherednik::rational::{parse_rational, Rational};
use cherednik::shapes::{parse_multipartition, Cell, MultiPartition};

use crate::render::CLASSIFY_SCHEMA;

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| anyhow!("missing field `{key}`"))
}

fn as_usize(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| anyhow!("`{key}` is not a non-negative integer"))
}

fn as_bool(v: &Value, key: &str) -> Result<bool> {
    field(v, key)?.as_bool().ok_or_else(|| anyhow!("`{key}` is not a boolean"))
}

fn as_str<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    field(v, key)?.as_str().ok_or_else(|| anyhow!("`{key}` is not a string"))
}

fn rational(v: &Value) -> Result<Rational> {
    let s = v.as_str().ok_or_else(|| anyhow!("rational must be a \"p/q\" string"))?;
    Ok(parse_rational(s)?)
}

fn param(v: &Value) -> Result<Parameter> {
    let r = as_usize(v, "r")?;
    let c0 = rational(field(v, "c0")?)?;
    let d = field(v, "d")?
        .as_array()
        .ok_or_else(|| anyhow!("`d` is not a list"))?
        .iter()
        .map(rational)
        .collect::<Result<Vec<_>>>()?;
    Ok(Parameter::from_full(r, c0, d)?)
}

fn cell(v: &Value) -> Result<Cell> {
    let b = Cell::new(as_usize(v, "component")?, as_usize(v, "row")?, as_usize(v, "col")?);
    if let Some(ct) = v.get("content") {
        ensure!(ct.as_i64() == Some(b.content()), "box {b} has a wrong content");
    }
    Ok(b)
}

fn pq(v: &Value) -> Result<PQPair> {
    let list = |key: &str| -> Result<Vec<u64>> {
        field(v, key)?
            .as_array()
            .ok_or_else(|| anyhow!("`{key}` is not a list"))?
            .iter()
            .map(|x| x.as_u64().ok_or_else(|| anyhow!("`{key}` has a bad entry")))
            .collect()
    };
    Ok(PQPair { p: list("p")?.into_iter().map(|x| x as usize).collect(), q: list("q")? })
}

fn ext(v: &Value) -> Result<ExtendedNat> {
    match v {
        Value::String(s) if s == "inf" => Ok(ExtendedNat::Infinity),
        _ => v.as_u64().map(ExtendedNat::Finite).ok_or_else(|| anyhow!("bad statistic {v}")),
    }
}

fn near_fold(v: &Value) -> Result<NearFold> {
    let case = field(v, "case")?;
    let case = match as_str(case, "kind")? {
        "phi" => FoldCase::Phi,
        "reflection" => FoldCase::Reflection { i: as_usize(case, "i")? },
        other => bail!("unknown fold case `{other}`"),
    };
    let b3 = match field(v, "b3")? {
        Value::Null => None,
        x => Some(x.as_u64().ok_or_else(|| anyhow!("bad b3"))? as usize),
    };
    Ok(NearFold {
        pq: pq(field(v, "pq")?)?,
        case,
        b1: as_usize(v, "b1")?,
        b2: as_usize(v, "b2")?,
        b3,
        k: field(v, "k")?.as_u64().ok_or_else(|| anyhow!("bad k"))?,
        image: pq(field(v, "image")?)?,
        fold_at: as_usize(v, "fold_at")?,
    })
}

fn blocking(v: &Value) -> Result<BlockingSequence> {
    let t = field(v, "target")?;
    let target = match as_str(t, "kind")? {
        "char" => BlockTarget::Char { b: cell(field(t, "box")?)?, j: as_usize(t, "j")? },
        "pair" => BlockTarget::Pair { b: cell(field(t, "box")?)?, b2: cell(field(t, "box2")?)? },
        other => bail!("unknown blocking target `{other}`"),
    };
    let boxes = field(v, "boxes")?
        .as_array()
        .ok_or_else(|| anyhow!("`boxes` is not a list"))?
        .iter()
        .map(cell)
        .collect::<Result<Vec<_>>>()?;
    let l = match field(v, "l")? {
        Value::Null => None,
        x => Some(x.as_u64().ok_or_else(|| anyhow!("bad l"))? as usize),
    };
    Ok(BlockingSequence { target, boxes, l })
}

/// Returns `Ok(())` when every claim of the document re-validates.
pub fn check(doc: &Value) -> Result<()> {
    ensure!(as_str(doc, "schema")? == CLASSIFY_SCHEMA, "unsupported schema");
    let input = field(doc, "input")?;
    let c = param(field(input, "param")?).context("input parameter")?;
    let shape = parse_multipartition(as_str(input, "shape")?, c.r())?;
    let (rshape, rc, flipped) = reduce_sign(&shape, &c);
    let reduced = field(doc, "reduced")?;
    ensure!(as_bool(reduced, "flipped")? == flipped, "sign reduction flag is wrong");
    ensure!(as_str(reduced, "shape")? == rshape.to_string(), "reduced shape is wrong");
    ensure!(param(field(reduced, "param")?)? == rc, "reduced parameter is wrong");

    let diagonalizable = as_bool(doc, "diagonalizable")?;
    let unitary = as_bool(doc, "unitary")?;
    let certs = field(doc, "certificates")?;
    check_diag(field(certs, "diagonalizable")?, diagonalizable, &rshape, &rc)?;
    check_unitary(field(certs, "unitary")?, diagonalizable, unitary, &rshape, &rc)
}

fn check_diag(cert: &Value, diagonalizable: bool, shape: &MultiPartition, c: &Parameter) -> Result<()> {
    match as_str(cert, "kind")? {
        "c0_zero" => {
            ensure!(c.is_c0_zero(), "c0_zero certificate for c0 != 0");
            ensure!(diagonalizable, "c0 = 0 modules are diagonalizable");
        }
        "stats" => {
            ensure!(!c.is_c0_zero(), "statistics certificate for c0 = 0");
            let table = field(cert, "table")?.as_array().ok_or_else(|| anyhow!("`table` is not a list"))?;
            let mut seen = Vec::new();
            let mut all_pass = true;
            for row in table {
                let b = cell(field(row, "box")?)?;
                let (k, l) = (ext(field(row, "k")?)?, ext(field(row, "l")?)?);
                ensure!(k == c.k_stat(&b, shape), "k statistic of {b} is wrong");
                ensure!(l == c.l_stat(&b, shape), "l statistic of {b} is wrong");
                all_pass &= !k.is_finite() || l < k;
                seen.push(b);
            }
            let mut removable = shape.removable_boxes();
            removable.sort();
            seen.sort();
            ensure!(seen == removable, "table does not list exactly the removable boxes");
            ensure!(all_pass == diagonalizable, "verdict does not follow from the table");
            match field(cert, "near_fold")? {
                Value::Null => ensure!(diagonalizable, "negative verdict without a near fold"),
                nf => {
                    ensure!(!diagonalizable, "near fold attached to a positive verdict");
                    verify_near_fold(&near_fold(nf)?, shape, c)?;
                }
            }
        }
        other => bail!("unknown diagonalizability certificate `{other}`"),
    }
    Ok(())
}

fn check_unitary(
    cert: &Value,
    diagonalizable: bool,
    unitary: bool,
    shape: &MultiPartition,
    c: &Parameter,
) -> Result<()> {
    match as_str(cert, "kind")? {
        "c0_zero" => {
            ensure!(c.is_c0_zero(), "c0_zero certificate for c0 != 0");
            let mut failed = false;
            for row in field(cert, "checked")?.as_array().ok_or_else(|| anyhow!("`checked` is not a list"))? {
                let (i, j) = (as_usize(row, "i")? as i64, as_usize(row, "j")? as i64);
                ensure!(!shape.component(i as usize).is_empty(), "component {i} is empty");
                let mij = c.m(i, j);
                ensure!(c.linear(i, j, 0) > Rational::from_integer(mij.into()), "({i}, {j}) needs no witness");
                match field(row, "k")? {
                    Value::Null => failed = true,
                    k => {
                        let k = k.as_i64().ok_or_else(|| anyhow!("bad k"))?;
                        let mik = c.m(i, k);
                        ensure!(
                            mik < mij && c.linear(i, k, 0) == Rational::from_integer(mik.into()),
                            "witness k = {k} fails for ({i}, {j})"
                        );
                    }
                }
            }
            ensure!(failed != unitary, "verdict does not follow from the witnesses");
            if unitary {
                // Every required (i, j) must be listed.
                for i in 0..c.r() {
                    if shape.component(i).is_empty() {
                        continue;
                    }
                    for j in 0..c.r() {
                        let (ii, jj) = (i as i64, j as i64);
                        if c.linear(ii, jj, 0) > Rational::from_integer(c.m(ii, jj).into()) {
                            let listed = field(cert, "checked")?
                                .as_array()
                                .unwrap()
                                .iter()
                                .any(|row| row["i"] == i && row["j"] == j);
                            ensure!(listed, "required residue pair ({i}, {j}) is missing");
                        }
                    }
                }
            }
        }
        "not_diagonalizable" => {
            ensure!(!diagonalizable && !unitary, "not_diagonalizable certificate with a diagonalizable verdict");
        }
        "blocked" => {
            ensure!(unitary && diagonalizable, "blocking certificate with a negative verdict");
            let seqs = field(cert, "sequences")?
                .as_array()
                .ok_or_else(|| anyhow!("`sequences` is not a list"))?
                .iter()
                .map(blocking)
                .collect::<Result<Vec<_>>>()?;
            for s in &seqs {
                ensure!(verify_blocking(s, shape, c), "blocking sequence {:?} fails", s.target);
            }
            for b1 in shape.boxes() {
                for b2 in shape.boxes() {
                    if pair_needs_blocking(c, b1, b2) {
                        let t = BlockTarget::Pair { b: *b1, b2: *b2 };
                        ensure!(seqs.iter().any(|s| s.target == t), "pair ({b1}, {b2}) is not blocked");
                    }
                }
                for j in 0..c.r() {
                    if char_needs_blocking(c, b1, j) {
                        let t = BlockTarget::Char { b: *b1, j };
                        ensure!(seqs.iter().any(|s| s.target == t), "box {b1} with residue {j} is not blocked");
                    }
                }
            }
        }
        "pair_unblocked" => {
            ensure!(!unitary, "violation certificate with a unitary verdict");
            let target = ViolationTarget::Pair(cell(field(cert, "b1")?)?, cell(field(cert, "b2")?)?);
            check_violation(&target, &pq(field(cert, "witness")?)?, shape, c)?;
        }
        "char_unblocked" => {
            ensure!(!unitary, "violation certificate with a unitary verdict");
            let target = ViolationTarget::Char(cell(field(cert, "box")?)?, as_usize(cert, "j")?);
            check_violation(&target, &pq(field(cert, "witness")?)?, shape, c)?;
        }
        other => bail!("unknown unitarity certificate `{other}`"),
    }
    Ok(())
}
