//! Lemma registry: named claims from the source paper bound to executable
//! exact checks, with verbatim citations.

use adhm_core::exactalg::Subspace;
use adhm_core::forms::{is_costable, is_stable, stabilizer_lie, wedge_bracket_iso, Flavor};
use adhm_core::ideals::{
    build_ideal, elimination, groebner, is_complete_intersection, krull_dimension,
    nonreduced_ci_test, sample_orbit_image, FieldTag, IdealKind, Poly,
};
use adhm_core::kp::{strata_dimension, AbDiagram};
use adhm_core::partition::{
    ambient_character, brute_force_invariant_dim, expand, invariant_ambient_part, weights_of_n,
    RationalCharacter, WeylData,
};
use adhm_core::{factorization, fixtures};
use num::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};
use std::time::Instant;

/// Bundled citation table: (location in the source paper, verbatim quote).
pub const CITATIONS: &[(&str, &str)] = &[
    (
        "corrigendum §1.1",
        r"If $A={\mathrm{I}}$, then $x$ is unstable and $\dim\mathfrak{sp} ^{x}=2$.",
    ),
    (
        "original §4.2",
        r"By direct computation, the Lie brackets of pairs of basis elements of $\mathfrak{p} '$ are",
    ),
    (
        "original §4.2",
        r"$\dim \mathfrak{t} =\dim \wedge^2\mathfrak{p} '=10$. Thus $F$ is an isomorphism.",
    ),
    (
        "corrigendum, Cor. on the four orbits",
        r"each $G$-orbit is irreducible of dimension $12$, $12$, $11$ and $9$ respectively.",
    ),
    (
        "original §3, k = 2 diagrams",
        r"where the left-most one actually occurs only when $N\ge4$.",
    ),
    (
        "corrigendum, Lemma on stability",
        r"If $A={\mathrm{II}}$, $x$ is stable (hence $\mathrm{Sp}^x$ is trivial).",
    ),
    (
        "corrigendum, abstract",
        r"is non-reduced, which is a corrigendum to",
    ),
    (
        "corrigendum §3.2",
        r"contains the fat point $\mathbb C[x,y,z]/(x,y,z)^2$ as a closed subscheme, hence it is non-reduced.",
    ),
    (
        "original, Lemma on strata dimensions",
        r"nonempty if and only if \textit{either} $N=3$ and $k'\in 4\mathbb Z_{\ge0}$, \textit{or} $N\ge4$ and $k'\in 2\mathbb Z_{\ge0}$.",
    ),
    (
        "corrigendum §2",
        r"comes from the product $(\mu_{(2)}^{-1}(0))^2$ by the factorization property.",
    ),
    (
        "corrigendum, GIT quotient theorem",
        r"$\Phi$ is the GIT quotient by $\mathrm{Sp}$ onto $(\mathbf P\times 0)\cup (0\times \mathbf P)$.",
    ),
    (
        "Appendix A",
        r"are of weight $q_1$ and $q_2$ respectively.",
    ),
    (
        "intro §1.4",
        r"over the maximal compact subgroup of $T'_k$ by Weyl's integration formula.",
    ),
];

pub struct LemmaCheck {
    pub id: &'static str,
    /// Index into CITATIONS.
    pub citation: usize,
    pub expected: Value,
    pub runner: fn() -> Result<Value, String>,
}

#[derive(Serialize)]
pub struct Report {
    pub id: String,
    pub status: String,
    pub computed: Value,
    pub expected: Value,
    pub citation: String,
    pub runtime_ms: u128,
}

fn flat(m: &adhm_core::exactalg::Matrix) -> Vec<adhm_core::exactalg::Scalar> {
    let mut out = Vec::new();
    for r in 0..m.rows {
        for c in 0..m.cols {
            out.push(m[(r, c)].clone());
        }
    }
    out
}

fn check_sp_x_dim() -> Result<Value, String> {
    Ok(json!(stabilizer_lie(&fixtures::x_i()).len()))
}

fn check_sp_x_span() -> Result<Value, String> {
    let computed = stabilizer_lie(&fixtures::x_i());
    let expected = fixtures::sp_x_basis();
    let a = Subspace::from_spanning(16, &computed.iter().map(flat).collect::<Vec<_>>());
    let b = Subspace::from_spanning(16, &expected.iter().map(flat).collect::<Vec<_>>());
    Ok(json!(a.equals(&b)))
}

fn check_bracket_table() -> Result<Value, String> {
    let basis = fixtures::p_prime_basis();
    let mut ok = 0;
    for ((i, j), expected) in fixtures::bracket_table() {
        let got = adhm_core::exactalg::commutator(&basis[i - 1], &basis[j - 1]);
        if got == expected {
            ok += 1;
        }
    }
    Ok(json!(ok))
}

fn check_wedge_iso_rank() -> Result<Value, String> {
    Ok(json!(wedge_bracket_iso(&fixtures::p_prime_basis()).rank()))
}

fn check_orbit_dims() -> Result<Value, String> {
    let dims: Result<Vec<usize>, String> = ["x_I", "x_II", "x_III", "x_IV"]
        .iter()
        .map(|name| {
            let x = fixtures::fixture_datum(name).ok_or("missing fixture")?;
            let d = adhm_core::kp::abdiagram_of(&x.i, &x.setting)
                .map_err(|e| e.to_string())?
                .dim_spo_orbit()
                .map_err(|e| e.to_string())?;
            Ok(d + 3) // dim G.x = 3 + dim (Sp x O).i on these strata
        })
        .collect();
    Ok(json!(dims?))
}

fn check_k2_family() -> Result<Value, String> {
    let mut out = Vec::new();
    for n in [3usize, 4, 5] {
        let mut dims = Vec::new();
        if n >= 4 {
            let top: AbDiagram = format!("aba\naba\n{}", "a\n".repeat(n - 4))
                .parse()
                .map_err(|e: adhm_core::kp::KpError| e.to_string())?;
            dims.push(top.dim_spo_orbit().map_err(|e| e.to_string())?);
        }
        for text in [
            format!("ab\nba\n{}", "a\n".repeat(n - 2)),
            format!("b\nb\n{}", "a\n".repeat(n)),
        ] {
            let d: AbDiagram = text.parse().map_err(|e: adhm_core::kp::KpError| e.to_string())?;
            dims.push(d.dim_spo_orbit().map_err(|e| e.to_string())?);
        }
        out.push(json!({ "N": n, "dims": dims }));
    }
    Ok(json!(out))
}

fn check_stability_table() -> Result<Value, String> {
    let mut rows = Vec::new();
    for name in ["x_I", "x_II", "x_III", "x_IV"] {
        let x = fixtures::fixture_datum(name).ok_or("missing fixture")?;
        rows.push(json!({
            "fixture": name,
            "stable": is_stable(&x),
            "costable": is_costable(&x),
        }));
    }
    Ok(json!(rows))
}

fn check_rho_n3k2() -> Result<Value, String> {
    let spec = build_ideal(IdealKind::Rho, 3, 2, Flavor::SOData, FieldTag::Q)
        .map_err(|e| e.to_string())?;
    let g = groebner(&spec.ring, &spec.gens, 1_000_000).map_err(|e| e.to_string())?;
    let dim = krull_dimension(&g);
    let ci = is_complete_intersection(&g, spec.gens.len());
    let nonred =
        nonreduced_ci_test(&spec.ring, &spec.gens, &g, 1_000_000).map_err(|e| e.to_string())?;
    Ok(json!({ "dimension": dim, "is_ci": ci, "nonreduced": nonred }))
}

fn check_fat_point() -> Result<Value, String> {
    let spec = build_ideal(IdealKind::PiImageTags, 3, 2, Flavor::SOData, FieldTag::Q)
        .map_err(|e| e.to_string())?;
    let (ring, polys) =
        elimination(&spec.ring, &spec.gens, &spec.tag_vars, 2_000_000).map_err(|e| e.to_string())?;
    let g = groebner(&ring, &polys, 1_000_000).map_err(|e| e.to_string())?;
    // the square of the irrelevant ideal in the three tag variables
    let square: Vec<Poly> = {
        let mut out = Vec::new();
        for a in 0..3 {
            for b in a..3 {
                out.push(ring.var(a).mul(&ring, &ring.var(b)));
            }
        }
        out
    };
    let h = groebner(&ring, &square, 1_000_000).map_err(|e| e.to_string())?;
    let eq = square.iter().all(|f| g.contains(f)) && g.polys.iter().all(|f| h.contains(f));
    Ok(json!(eq))
}

fn check_strata_dims() -> Result<Value, String> {
    let mut rows = Vec::new();
    for (n, k, kp) in [(3usize, 4usize, 0usize), (3, 4, 2), (3, 4, 4), (4, 4, 2), (5, 2, 2)] {
        rows.push(json!({
            "N": n, "k": k, "kprime": kp,
            "symplectic": strata_dimension(n, k, kp, Flavor::SOData),
            "orthogonal": strata_dimension(n, k, kp, Flavor::SpData),
        }));
    }
    Ok(json!(rows))
}

fn check_factorization_round_trip() -> Result<Value, String> {
    let x = fixtures::x_i();
    let (ep, blocks, g) = factorization::split_by_spectrum(&x).map_err(|e| e.to_string())?;
    let back = factorization::assemble(&blocks, &ep).map_err(|e| e.to_string())?;
    let ginv = g.inverse().ok_or("singular change of basis")?;
    let restored = back.conjugate(&ginv, None);
    let round_trip = restored.b1 == x.b1 && restored.b2 == x.b2 && restored.i == x.i;
    let supports: Vec<Vec<String>> = ep
        .supports
        .iter()
        .map(|s| s.iter().map(|e| e.to_string()).collect())
        .collect();
    Ok(json!({
        "round_trip": round_trip,
        "supports": supports,
        "stabilizer_product": factorization::stabilizer_product_check(&x),
    }))
}

fn check_orbit_images() -> Result<Value, String> {
    let mut first_ok = true;
    for s in sample_orbit_image(&fixtures::x_i(), 25, 11) {
        first_ok &= s.pi_is_zero() && s.triple_quadric_residual().is_zero() && !s.triple_is_zero();
    }
    let mut second_ok = true;
    for s in sample_orbit_image(&fixtures::x_ii(), 25, 12) {
        second_ok &= s.triple_is_zero() && s.pi_quadric_residual().is_zero() && !s.pi_is_zero();
    }
    Ok(json!({ "type_i_first_factor": first_ok, "type_ii_second_factor": second_ok }))
}

fn check_ambient_formula() -> Result<Value, String> {
    let mut ok = true;
    for (flavor, n, k, eps) in [
        (Flavor::SpData, 2usize, 1usize, 1i64),
        (Flavor::SpData, 2, 2, 1),
        (Flavor::SOData, 3, 2, -1),
    ] {
        let rc = RationalCharacter {
            numerator_weights: Vec::new(),
            denominator_weights: weights_of_n(flavor, n, k).map_err(|e| e.to_string())?,
            zrank: k / 2,
            trank: n / 2,
        };
        ok &= expand(&rc, 8).collapse_zt() == ambient_character(k, n, eps, 8);
    }
    Ok(json!(ok))
}

fn check_invariant_oracle() -> Result<Value, String> {
    let mut ok = true;
    for (flavor, n, k) in [(Flavor::SpData, 2usize, 2usize), (Flavor::SOData, 3, 2)] {
        let wd = WeylData::for_setting(flavor, k).map_err(|e| e.to_string())?;
        let weyl = invariant_ambient_part(flavor, n, k, &wd, 6)
            .map_err(|e| e.to_string())?
            .collapse_zt();
        for a in 0..=6i64 {
            for b in 0..=(6 - a) {
                let bf = brute_force_invariant_dim(flavor, n, k, (a, b), false)
                    .map_err(|e| e.to_string())?;
                let got = weyl
                    .get(&(a, b))
                    .map(|c| c.to_integer().to_usize().unwrap_or(0))
                    .unwrap_or(0);
                ok &= got == bf;
            }
        }
    }
    Ok(json!(ok))
}

pub fn registry() -> Vec<LemmaCheck> {
    vec![
        LemmaCheck {
            id: "corrigendum.sp_x_dim",
            citation: 0,
            expected: json!(2),
            runner: check_sp_x_dim,
        },
        LemmaCheck {
            id: "corrigendum.sp_x_span",
            citation: 0,
            expected: json!(true),
            runner: check_sp_x_span,
        },
        LemmaCheck {
            id: "forms.bracket_table",
            citation: 1,
            expected: json!(10),
            runner: check_bracket_table,
        },
        LemmaCheck {
            id: "forms.wedge_iso_rank",
            citation: 2,
            expected: json!(10),
            runner: check_wedge_iso_rank,
        },
        LemmaCheck {
            id: "kp.orbit_dims_N3k4",
            citation: 3,
            expected: json!([12, 12, 11, 9]),
            runner: check_orbit_dims,
        },
        LemmaCheck {
            id: "kp.k2_family",
            citation: 4,
            expected: json!([
                { "N": 3, "dims": [3, 0] },
                { "N": 4, "dims": [5, 4, 0] },
                { "N": 5, "dims": [7, 5, 0] },
            ]),
            runner: check_k2_family,
        },
        LemmaCheck {
            id: "forms.stability_table",
            citation: 5,
            expected: json!([
                { "fixture": "x_I", "stable": false, "costable": false },
                { "fixture": "x_II", "stable": true, "costable": true },
                { "fixture": "x_III", "stable": false, "costable": false },
                { "fixture": "x_IV", "stable": false, "costable": false },
            ]),
            runner: check_stability_table,
        },
        LemmaCheck {
            id: "ideals.rho_n3k2",
            citation: 6,
            expected: json!({ "dimension": 3, "is_ci": true, "nonreduced": true }),
            runner: check_rho_n3k2,
        },
        LemmaCheck {
            id: "ideals.fat_point",
            citation: 7,
            expected: json!(true),
            runner: check_fat_point,
        },
        LemmaCheck {
            id: "kp.strata_dims",
            citation: 8,
            expected: json!([
                { "N": 3, "k": 4, "kprime": 0, "symplectic": 4, "orthogonal": 8 },
                { "N": 3, "k": 4, "kprime": 2, "symplectic": null, "orthogonal": 14 },
                { "N": 3, "k": 4, "kprime": 4, "symplectic": 4, "orthogonal": 20 },
                { "N": 4, "k": 4, "kprime": 2, "symplectic": 6, "orthogonal": 16 },
                { "N": 5, "k": 2, "kprime": 2, "symplectic": 6, "orthogonal": 14 },
            ]),
            runner: check_strata_dims,
        },
        LemmaCheck {
            id: "factorization.round_trip",
            citation: 9,
            expected: json!({
                "round_trip": true,
                "supports": [["-1/2", "-1/2"], ["1/2", "1/2"]],
                "stabilizer_product": 2,
            }),
            runner: check_factorization_round_trip,
        },
        LemmaCheck {
            id: "git.orbit_images",
            citation: 10,
            expected: json!({ "type_i_first_factor": true, "type_ii_second_factor": true }),
            runner: check_orbit_images,
        },
        LemmaCheck {
            id: "partition.ambient_formula",
            citation: 11,
            expected: json!(true),
            runner: check_ambient_formula,
        },
        LemmaCheck {
            id: "partition.invariant_oracle",
            citation: 12,
            expected: json!(true),
            runner: check_invariant_oracle,
        },
    ]
}

/// Simple glob match supporting a trailing or leading '*'.
pub fn glob_match(pattern: &str, id: &str) -> bool {
    if pattern.is_empty() || pattern == "*" {
        return true;
    }
    if let Some(prefix) = pattern.strip_suffix('*') {
        return id.starts_with(prefix);
    }
    if let Some(suffix) = pattern.strip_prefix('*') {
        return id.ends_with(suffix);
    }
    id == pattern
}

pub fn run_check(check: &LemmaCheck) -> Report {
    let (loc, quote) = CITATIONS[check.citation];
    let start = Instant::now();
    let (status, computed) = match (check.runner)() {
        Ok(v) => {
            if v == check.expected {
                ("pass".to_string(), v)
            } else {
                ("fail".to_string(), v)
            }
        }
        Err(e) => ("fail".to_string(), json!({ "error": e })),
    };
    Report {
        id: check.id.to_string(),
        status,
        computed,
        expected: check.expected.clone(),
        citation: format!("{loc}: {quote}"),
        runtime_ms: start.elapsed().as_millis(),
    }
}

pub fn run_all(filter: &str, parallel: bool) -> Vec<Report> {
    let checks = registry();
    let selected: Vec<&LemmaCheck> =
        checks.iter().filter(|c| glob_match(filter, c.id)).collect();
    let mut reports: Vec<Report> = if parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> =
                selected.iter().map(|c| scope.spawn(move || run_check(c))).collect();
            handles.into_iter().map(|h| h.join().expect("check thread")).collect()
        })
    } else {
        selected.iter().map(|c| run_check(c)).collect()
    };
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}
