//! Explicit matrix fixtures on the symplectic C^4 with orthogonal framing
//! C^3: the basis v1..v5 of the trace-free self-adjoint part, the four data
//! x_I..x_IV, and the corrected stabilizer basis.

use crate::exactalg::{Matrix, Scalar};
use crate::forms::{ADHMDatum, BilinearSpace, FramedSetting};

fn half() -> Scalar {
    Scalar::from_frac(1, 2)
}

/// 2x2 building blocks.
pub fn blk_j() -> Matrix {
    Matrix::from_ints(2, 2, &[0, -1, 1, 0])
}
pub fn blk_h() -> Matrix {
    Matrix::from_ints(2, 2, &[1, 0, 0, -1])
}
pub fn blk_x() -> Matrix {
    Matrix::from_ints(2, 2, &[0, 1, 0, 0])
}
pub fn blk_y() -> Matrix {
    Matrix::from_ints(2, 2, &[0, 0, 1, 0])
}

fn id2() -> Matrix {
    Matrix::identity(2)
}

/// The fixture ambient: V = symplectic C^4 with (e1,e2) = (e3,e4) = 1,
/// W = orthogonal C^3 with the identity gram.
pub fn fixture_setting() -> FramedSetting {
    FramedSetting::so_data(3, 4)
}

pub fn fixture_v_space() -> BilinearSpace {
    BilinearSpace::standard_symplectic(4)
}

/// v1 = (1/2) diag(I, -I).
pub fn v1() -> Matrix {
    Matrix::block2(&id2(), &Matrix::zeros(2, 2), &Matrix::zeros(2, 2), &(-&id2())).scale(&half())
}

/// v2 = [[0, H], [-H, 0]].
pub fn v2() -> Matrix {
    Matrix::block2(&Matrix::zeros(2, 2), &blk_h(), &(-&blk_h()), &Matrix::zeros(2, 2))
}

/// v3 = [[0, X], [-X, 0]].
pub fn v3() -> Matrix {
    Matrix::block2(&Matrix::zeros(2, 2), &blk_x(), &(-&blk_x()), &Matrix::zeros(2, 2))
}

/// v4 = [[0, Y], [-Y, 0]].
pub fn v4() -> Matrix {
    Matrix::block2(&Matrix::zeros(2, 2), &blk_y(), &(-&blk_y()), &Matrix::zeros(2, 2))
}

/// v5 = (1/2) [[0, I], [I, 0]].
pub fn v5() -> Matrix {
    Matrix::block2(&Matrix::zeros(2, 2), &id2(), &id2(), &Matrix::zeros(2, 2)).scale(&half())
}

pub fn p_prime_basis() -> Vec<Matrix> {
    vec![v1(), v2(), v3(), v4(), v5()]
}

/// The ten brackets [v_a, v_b] for a < b, in lexicographic pair order:
/// (1,2),(1,3),(1,4),(1,5),(2,3),(2,4),(2,5),(3,4),(3,5),(4,5).
pub fn bracket_table() -> Vec<((usize, usize), Matrix)> {
    let z = Matrix::zeros(2, 2);
    let (h, x, y, i2) = (blk_h(), blk_x(), blk_y(), id2());
    vec![
        ((1, 2), Matrix::block2(&z, &h, &h, &z)),
        ((1, 3), Matrix::block2(&z, &x, &x, &z)),
        ((1, 4), Matrix::block2(&z, &y, &y, &z)),
        ((1, 5), Matrix::block2(&z, &i2, &(-&i2), &z).scale(&half())),
        ((2, 3), Matrix::block2(&x, &z, &z, &x).scale(&Scalar::from_int(-2))),
        ((2, 4), Matrix::block2(&y, &z, &z, &y).scale(&Scalar::from_int(2))),
        ((2, 5), Matrix::block2(&h, &z, &z, &(-&h))),
        ((3, 4), -&Matrix::block2(&h, &z, &z, &h)),
        ((3, 5), Matrix::block2(&x, &z, &z, &(-&x))),
        ((4, 5), Matrix::block2(&y, &z, &z, &(-&y))),
    ]
}

fn col(entries: [Scalar; 4]) -> Vec<Scalar> {
    entries.to_vec()
}

fn e(n: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); 4];
    v[n - 1] = Scalar::one();
    v
}

fn scale_vec(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

/// u = e1 + i e3 (isotropic).
fn u_vec() -> Vec<Scalar> {
    vec![Scalar::one(), Scalar::zero(), Scalar::i(), Scalar::zero()]
}

/// The datum x_I: B1 = v5, B2 = v1 - (1/2) v2, i with the explicit columns.
pub fn x_i() -> ADHMDatum {
    let b2 = &v1() + &v2().scale(&Scalar::from_frac(-1, 2));
    let ih = Scalar::gauss(0, 1) * half(); // i/2
    let c1 = col([-ih.clone(), ih.clone(), -ih.clone(), -ih.clone()]);
    let mh = -half();
    let c2 = col([mh.clone(), mh.clone(), mh.clone(), half()]);
    let c3 = vec![Scalar::zero(); 4];
    let i = Matrix::from_columns(4, &[c1, c2, c3]);
    ADHMDatum::new(fixture_setting(), v5(), b2, i).expect("fixture is well-formed")
}

/// The datum x_II: B1 = v3, B2 = i v1 - v5, i = (e2 | i e2 | u).
pub fn x_ii() -> ADHMDatum {
    let b2 = &v1().scale(&Scalar::i()) + &(-&v5());
    let i = Matrix::from_columns(4, &[e(2), scale_vec(&e(2), &Scalar::i()), u_vec()]);
    ADHMDatum::new(fixture_setting(), v3(), b2, i).expect("fixture is well-formed")
}

/// The datum x_III: same B's as x_II, i = (e1 | i e1 | u).
pub fn x_iii() -> ADHMDatum {
    let b2 = &v1().scale(&Scalar::i()) + &(-&v5());
    let i = Matrix::from_columns(4, &[e(1), scale_vec(&e(1), &Scalar::i()), u_vec()]);
    ADHMDatum::new(fixture_setting(), v3(), b2, i).expect("fixture is well-formed")
}

/// The datum x_IV: same B's as x_II, i = (0 | u | 0).
pub fn x_iv() -> ADHMDatum {
    let b2 = &v1().scale(&Scalar::i()) + &(-&v5());
    let zero = vec![Scalar::zero(); 4];
    let i = Matrix::from_columns(4, &[zero.clone(), u_vec(), zero]);
    ADHMDatum::new(fixture_setting(), v3(), b2, i).expect("fixture is well-formed")
}

/// The corrected stabilizer basis: [[X,X],[X,X]] and [[Y,-Y],[-Y,Y]].
pub fn sp_x_basis() -> Vec<Matrix> {
    let (x, y) = (blk_x(), blk_y());
    vec![
        Matrix::block2(&x, &x, &x, &x),
        Matrix::block2(&y, &(-&y), &(-&y), &y),
    ]
}

/// Named fixture lookup for the CLI.
pub fn fixture_matrix(name: &str) -> Option<Matrix> {
    match name {
        "v1" => Some(v1()),
        "v2" => Some(v2()),
        "v3" => Some(v3()),
        "v4" => Some(v4()),
        "v5" => Some(v5()),
        "sp_x_1" => Some(sp_x_basis()[0].clone()),
        "sp_x_2" => Some(sp_x_basis()[1].clone()),
        _ => None,
    }
}

pub fn fixture_datum(name: &str) -> Option<ADHMDatum> {
    match name {
        "x_I" => Some(x_i()),
        "x_II" => Some(x_ii()),
        "x_III" => Some(x_iii()),
        "x_IV" => Some(x_iv()),
        _ => None,
    }
}

pub fn fixture_names() -> Vec<&'static str> {
    vec!["v1", "v2", "v3", "v4", "v5", "sp_x_1", "sp_x_2", "x_I", "x_II", "x_III", "x_IV"]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{commutator, Subspace};
    use crate::forms::{
        in_p, is_costable, is_stable, lie_basis_traceless_p, moment_map, rho,
        scalar_commutator_check, stabilizer_lie, wedge_bracket_iso,
    };

    #[test]
    fn v_basis_spans_p_prime() {
        let v = fixture_v_space();
        for m in p_prime_basis() {
            assert!(in_p(&m, &v));
            assert!(m.trace().is_zero());
        }
        let flat: Vec<Vec<Scalar>> = p_prime_basis().iter().map(|m| m.entries.clone()).collect();
        let span = Subspace::from_spanning(16, &flat);
        assert_eq!(span.dim(), 5);
        assert_eq!(lie_basis_traceless_p(&v).len(), 5);
        let canon: Vec<Vec<Scalar>> =
            lie_basis_traceless_p(&v).iter().map(|m| m.entries.clone()).collect();
        assert!(span.equals(&Subspace::from_spanning(16, &canon)));
    }

    #[test]
    fn bracket_table_matches_commutators() {
        let basis = p_prime_basis();
        for ((a, b), expected) in bracket_table() {
            assert_eq!(commutator(&basis[a - 1], &basis[b - 1]), expected, "[v{a},v{b}]");
        }
    }

    #[test]
    fn wedge_bracket_rank_10() {
        assert_eq!(wedge_bracket_iso(&p_prime_basis()).rank(), 10);
    }

    #[test]
    fn all_fixtures_satisfy_moment_zero() {
        for name in ["x_I", "x_II", "x_III", "x_IV"] {
            let x = fixture_datum(name).unwrap();
            assert!(moment_map(&x).is_zero(), "{name} should lie in the zero fibre");
        }
    }

    #[test]
    fn type_i_commutator_value() {
        let x = x_i();
        let c = commutator(&x.b1, &x.b2);
        let expected = Matrix::from_ints(
            4,
            4,
            &[1, 0, -1, 0, 0, -1, 0, -1, 1, 0, -1, 0, 0, 1, 0, 1],
        )
        .scale(&Scalar::from_frac(1, 2));
        assert_eq!(c, expected);
        // mu = 0 means i i* is exactly the negative of this
        assert_eq!(&x.i * &x.j(), -&expected);
    }

    #[test]
    fn type_ii_commutator_value() {
        let x = x_ii();
        let c = commutator(&x.b1, &x.b2);
        let i = Scalar::i();
        let mk = |v: [Scalar; 16]| Matrix::from_fn(4, 4, |r, cc| v[r * 4 + cc].clone());
        let z = Scalar::zero;
        let expected = mk([
            z(),
            Scalar::from_int(-1),
            z(),
            -&i,
            z(),
            z(),
            z(),
            z(),
            z(),
            -&i,
            z(),
            Scalar::one(),
            z(),
            z(),
            z(),
            z(),
        ]);
        assert_eq!(c, expected);
    }

    #[test]
    fn stabilizers_match_corrigendum() {
        let stab = stabilizer_lie(&x_i());
        assert_eq!(stab.len(), 2);
        let flat: Vec<Vec<Scalar>> = stab.iter().map(|m| m.entries.clone()).collect();
        let got = Subspace::from_spanning(16, &flat);
        let want: Vec<Vec<Scalar>> = sp_x_basis().iter().map(|m| m.entries.clone()).collect();
        assert!(got.equals(&Subspace::from_spanning(16, &want)));

        assert_eq!(stabilizer_lie(&x_ii()).len(), 0);
        assert_eq!(stabilizer_lie(&x_iii()).len(), 2);
        assert_eq!(stabilizer_lie(&x_iv()).len(), 3);
    }

    #[test]
    fn stability_table() {
        assert!(is_stable(&x_ii()) && is_costable(&x_ii()));
        for name in ["x_I", "x_III", "x_IV"] {
            assert!(!is_costable(&fixture_datum(name).unwrap()), "{name}");
        }
        // witness for x_I: e1 + e3 spans an invariant line inside Ker j
        let x = x_i();
        let w = vec![Scalar::one(), Scalar::zero(), Scalar::one(), Scalar::zero()];
        assert!(x.j().mul_vec(&w).iter().all(Scalar::is_zero));
        let line = Subspace::from_spanning(4, &[w]);
        assert!(line.image(&x.b1).dim() == 0 || line.contains_subspace(&line.image(&x.b1)));
        assert!(line.image(&x.b2).dim() == 0 || line.contains_subspace(&line.image(&x.b2)));
    }

    #[test]
    fn rho_squared_vanishes_for_type_i() {
        let x = x_i();
        let r = rho(&x.i, &x.setting);
        assert!(r.pow(2).is_zero());
    }

    #[test]
    fn type_i_pair_has_nilpotent_commutator() {
        let v = fixture_v_space();
        let x = x_i();
        let c = scalar_commutator_check(&x.b1, &x.b2, &v).unwrap();
        assert!(c.is_zero());
    }
}
