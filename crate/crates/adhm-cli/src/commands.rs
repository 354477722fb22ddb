//! Implementations of the non-registry subcommands and their JSON output.

use adhm_core::exactalg::{Matrix, Scalar};
use adhm_core::forms::{ADHMDatum, Flavor, FramedSetting};
use adhm_core::ideals::{
    build_ideal, effective_budget, groebner, is_complete_intersection, krull_dimension,
    nonreduced_ci_test, FieldTag, GroebnerError, IdealKind,
};
use adhm_core::kp::{abdiagram_of, enumerate_valid_diagrams, AbDiagram};
use adhm_core::partition::{nekrasov_z, TruncatedSeries};
use adhm_core::{factorization, fixtures};
use anyhow::{anyhow, bail, Result};
use num::{BigRational, One, Zero};
use serde_json::{json, Value};
use std::time::Instant;

pub fn parse_field(s: &str) -> Result<FieldTag> {
    if s == "q" {
        return Ok(FieldTag::Q);
    }
    if let Some(p) = s.strip_prefix("fp:") {
        return Ok(FieldTag::Fp(p.parse()?));
    }
    bail!("unknown field {s:?}; expected `q` or `fp:<prime>`")
}

pub fn parse_flavor(s: &str) -> Result<Flavor> {
    match s {
        "so" => Ok(Flavor::SOData),
        "sp" => Ok(Flavor::SpData),
        _ => bail!("unknown flavor {s:?}; expected `so` or `sp`"),
    }
}

fn diagram_json(d: &AbDiagram) -> Value {
    json!({
        "text": d.to_string(),
        "rows": d.rows.iter().map(|r| json!({
            "start": format!("{:?}", r.start).to_lowercase(),
            "len": r.len,
        })).collect::<Vec<_>>(),
        "dim": d.dim_spo_orbit().ok(),
    })
}

pub fn cmd_abdiagram(
    classify: Option<&str>,
    na: Option<usize>,
    nb: Option<usize>,
) -> Result<Value> {
    if let Some(name) = classify {
        let x = fixtures::fixture_datum(name)
            .ok_or_else(|| anyhow!("unknown fixture {name:?}; see `adhm fixtures`"))?;
        let d = abdiagram_of(&x.i, &x.setting).map_err(|e| anyhow!(e.to_string()))?;
        return Ok(json!({ "fixture": name, "diagram": diagram_json(&d) }));
    }
    let (na, nb) = (
        na.ok_or_else(|| anyhow!("--na required without --classify"))?,
        nb.ok_or_else(|| anyhow!("--nb required without --classify"))?,
    );
    let all = enumerate_valid_diagrams(na, nb);
    Ok(json!({
        "na": na,
        "nb": nb,
        "count": all.len(),
        "diagrams": all.iter().map(diagram_json).collect::<Vec<_>>(),
    }))
}

pub fn parse_kind(s: &str) -> Result<IdealKind> {
    Ok(match s {
        "mu" => IdealKind::Mu,
        "mu_traceless" => IdealKind::MuTraceless,
        "rho" => IdealKind::Rho,
        "pi_image_tags" => IdealKind::PiImageTags,
        "commutator" => IdealKind::Commutator,
        "product" => IdealKind::Product,
        _ => bail!("unknown ideal kind {s:?}"),
    })
}

pub fn cmd_groebner(
    kind: IdealKind,
    n: usize,
    k: usize,
    flavor: Flavor,
    field: FieldTag,
    budget: Option<u64>,
) -> Result<(Value, bool)> {
    let start = Instant::now();
    let budget = effective_budget(budget);
    let spec = build_ideal(kind, n, k, flavor, field).map_err(|e| anyhow!(e.to_string()))?;
    let g = match groebner(&spec.ring, &spec.gens, budget) {
        Ok(g) => g,
        Err(GroebnerError::BudgetExhausted(b)) => {
            return Ok((json!({ "error": format!("budget of {b} S-pairs exhausted") }), true))
        }
        Err(e) => return Err(anyhow!(e.to_string())),
    };
    let dim = krull_dimension(&g);
    let is_ci = is_complete_intersection(&g, spec.gens.len());
    let nonreduced = if is_ci {
        match nonreduced_ci_test(&spec.ring, &spec.gens, &g, budget) {
            Ok(v) => Some(v),
            Err(GroebnerError::BudgetExhausted(b)) => {
                return Ok((json!({ "error": format!("budget of {b} S-pairs exhausted") }), true))
            }
            Err(e) => return Err(anyhow!(e.to_string())),
        }
    } else {
        None
    };
    Ok((
        json!({
            "label": spec.label,
            "dimension": dim,
            "codim": spec.ring.nvars() - dim,
            "n_gens": spec.gens.len(),
            "is_ci": is_ci,
            "nonreduced": nonreduced,
            "runtime_ms": start.elapsed().as_millis() as u64,
        }),
        false,
    ))
}

fn matrix_json(m: &Matrix) -> Value {
    json!((0..m.rows)
        .map(|r| (0..m.cols).map(|c| m[(r, c)].to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let rows = v.as_array().ok_or_else(|| anyhow!("matrix must be an array of rows"))?;
    let nrows = rows.len();
    let ncols = rows
        .first()
        .and_then(|r| r.as_array())
        .map(|r| r.len())
        .ok_or_else(|| anyhow!("matrix rows must be arrays"))?;
    let mut entries = Vec::with_capacity(nrows * ncols);
    for row in rows {
        let row = row.as_array().ok_or_else(|| anyhow!("matrix rows must be arrays"))?;
        if row.len() != ncols {
            bail!("ragged matrix rows");
        }
        for e in row {
            let s = e.as_str().ok_or_else(|| anyhow!("matrix entries must be strings"))?;
            entries.push(s.parse::<Scalar>().map_err(|e| anyhow!(e))?);
        }
    }
    let mut it = entries.into_iter();
    Ok(Matrix::from_fn(nrows, ncols, |_, _| it.next().expect("counted")))
}

pub fn datum_json(x: &ADHMDatum) -> Value {
    json!({
        "setting": {
            "k": x.setting.k(),
            "N": x.setting.n(),
            "flavor": if x.setting.flavor == Flavor::SpData { "sp" } else { "so" },
        },
        "B1": matrix_json(&x.b1),
        "B2": matrix_json(&x.b2),
        "i": matrix_json(&x.i),
    })
}

pub fn datum_from_json(v: &Value) -> Result<ADHMDatum> {
    let setting = v.get("setting").ok_or_else(|| anyhow!("missing setting"))?;
    let k = setting.get("k").and_then(Value::as_u64).ok_or_else(|| anyhow!("missing k"))? as usize;
    let n = setting.get("N").and_then(Value::as_u64).ok_or_else(|| anyhow!("missing N"))? as usize;
    let flavor = parse_flavor(
        setting.get("flavor").and_then(Value::as_str).ok_or_else(|| anyhow!("missing flavor"))?,
    )?;
    let setting = match flavor {
        Flavor::SOData => FramedSetting::so_data(n, k),
        Flavor::SpData => FramedSetting::sp_data(n, k),
    };
    let b1 = matrix_from_json(v.get("B1").ok_or_else(|| anyhow!("missing B1"))?)?;
    let b2 = matrix_from_json(v.get("B2").ok_or_else(|| anyhow!("missing B2"))?)?;
    let i = matrix_from_json(v.get("i").ok_or_else(|| anyhow!("missing i"))?)?;
    ADHMDatum::new(setting, b1, b2, i).map_err(|e| anyhow!(e.to_string()))
}

/// Parse "1/2,1/2;-1/2,-1/2" into support groups.
fn parse_supports(s: &str) -> Result<Vec<Vec<Scalar>>> {
    s.split(';')
        .map(|group| {
            group
                .split(',')
                .map(|e| e.trim().parse::<Scalar>().map_err(|e| anyhow!(e)))
                .collect()
        })
        .collect()
}

pub fn cmd_factorize(
    fixture: Option<&str>,
    input: Option<&std::path::Path>,
    supports: Option<&str>,
) -> Result<Value> {
    let (label, x) = match (fixture, input) {
        (Some(name), None) => (
            name.to_string(),
            fixtures::fixture_datum(name)
                .ok_or_else(|| anyhow!("unknown fixture {name:?}; see `adhm fixtures`"))?,
        ),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            (path.display().to_string(), datum_from_json(&serde_json::from_str(&text)?)?)
        }
        _ => bail!("give exactly one of --fixture or --input"),
    };
    let (ep, blocks, g) = factorization::split_by_spectrum(&x).map_err(|e| anyhow!(e.to_string()))?;
    let back = factorization::assemble(&blocks, &ep).map_err(|e| anyhow!(e.to_string()))?;
    let ginv = g.inverse().ok_or_else(|| anyhow!("singular change of basis"))?;
    let restored = back.conjugate(&ginv, None);
    let computed_supports: Vec<Vec<Scalar>> = ep.supports.clone();
    let supports_match = match supports {
        None => None,
        Some(s) => {
            let mut want = parse_supports(s)?;
            let mut got = computed_supports.clone();
            let key = |g: &Vec<Scalar>| g.iter().map(Scalar::to_string).collect::<Vec<_>>();
            want.sort_by_key(key);
            got.sort_by_key(key);
            Some(want == got)
        }
    };
    Ok(json!({
        "input": label,
        "supports": computed_supports.iter()
            .map(|s| s.iter().map(Scalar::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "supports_match": supports_match,
        "blocks": blocks.blocks.iter().zip(&ep.supports).map(|(b, s)| json!({
            "B1": matrix_json(&b.b1),
            "B2": matrix_json(&b.b2),
            "i": matrix_json(&b.i),
            "support": s.iter().map(Scalar::to_string).collect::<Vec<_>>(),
            "moment_zero": b.moment().is_zero(),
        })).collect::<Vec<_>>(),
        "assembled": datum_json(&back),
        "round_trip": restored.b1 == x.b1 && restored.b2 == x.b2 && restored.i == x.i,
        "stabilizer_product": factorization::stabilizer_product_check(&x),
    }))
}

fn half_degree_string(doubled: i64) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("{doubled}/2")
    }
}

fn poly_string(terms: &std::collections::BTreeMap<adhm_core::partition::ZT, BigRational>) -> String {
    let mut parts = Vec::new();
    for ((z, t), c) in terms {
        if c.is_zero() {
            continue;
        }
        let mut monomial = String::new();
        for (idx, e) in z.iter().enumerate() {
            if *e != 0 {
                monomial.push_str(&format!("*z{}^{}", idx + 1, e));
            }
        }
        for (idx, e) in t.iter().enumerate() {
            if *e != 0 {
                monomial.push_str(&format!("*t{}^{}", idx + 1, e));
            }
        }
        if monomial.is_empty() {
            parts.push(format!("{c}"));
        } else if c.is_one() {
            parts.push(monomial[1..].to_string());
        } else {
            parts.push(format!("{c}{monomial}"));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

pub fn series_json(s: &TruncatedSeries) -> Value {
    json!({
        "order": half_degree_string(s.order),
        "terms": s.terms.iter().map(|(key, inner)| json!({
            "q1": half_degree_string(key.0),
            "q2": half_degree_string(key.1),
            "poly": poly_string(inner),
        })).collect::<Vec<_>>(),
    })
}

pub fn cmd_nekrasov(flavor: Flavor, n: usize, kmax: usize, order: i64) -> Result<Value> {
    let terms = nekrasov_z(flavor, n, kmax, 2 * order).map_err(|e| anyhow!(e.to_string()))?;
    Ok(json!({
        "flavor": if flavor == Flavor::SpData { "sp" } else { "so" },
        "N": n,
        "terms": terms.iter().map(|t| json!({
            "k": t.k,
            "instanton": t.instanton.map(|(num, den)| if den == 1 {
                format!("{num}")
            } else {
                format!("{num}/{den}")
            }),
            "series": series_json(&t.series),
        })).collect::<Vec<_>>(),
    }))
}

pub fn cmd_fixtures(name: Option<&str>) -> Result<Value> {
    match name {
        None => Ok(json!({ "fixtures": fixtures::fixture_names() })),
        Some(name) => {
            if let Some(x) = fixtures::fixture_datum(name) {
                let mut v = datum_json(&x);
                v["name"] = json!(name);
                v["moment_zero"] = json!(adhm_core::forms::moment_map(&x).is_zero());
                Ok(v)
            } else if let Some(m) = fixtures::fixture_matrix(name) {
                Ok(json!({ "name": name, "matrix": matrix_json(&m) }))
            } else {
                bail!("unknown fixture {name:?}")
            }
        }
    }
}
