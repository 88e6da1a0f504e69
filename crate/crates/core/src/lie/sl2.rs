use crate::arith::{frac, rat, MultiPoly, RationalFunction};

use super::{derive_invariant_form, BasisElement, Parity, RootData, SuperAlgebra};

/// `sl_2` with basis `(e, h, f)`, trace form `<e,f> = 1`, `<h,h> = 2`.
pub fn sl2() -> SuperAlgebra {
    let basis = [("e", 2), ("h", 0), ("f", -2)]
        .into_iter()
        .map(|(l, w)| BasisElement {
            label: l.to_string(),
            parity: Parity::Even,
            weight: vec![w],
        })
        .collect();
    let c = |n: i64| MultiPoly::from_int(n);
    let mut bracket = vec![vec![Vec::new(); 3]; 3];
    bracket[1][0] = vec![(0, c(2))];
    bracket[0][1] = vec![(0, c(-2))];
    bracket[1][2] = vec![(2, c(-2))];
    bracket[2][1] = vec![(2, c(2))];
    bracket[0][2] = vec![(1, c(1))];
    bracket[2][0] = vec![(1, c(-1))];
    let casimir = vec![
        (0, 2, c(1)),
        (2, 0, c(1)),
        (1, 1, MultiPoly::constant(frac(1, 2))),
    ];
    let mut alg = SuperAlgebra {
        name: "sl2".into(),
        basis,
        bracket,
        casimir,
        form: Vec::new(),
        roots: Some(RootData {
            cartan: vec![1],
            hstar_form: vec![vec![MultiPoly::constant(frac(1, 2))]],
            positive_roots: vec![(vec![2], Parity::Even)],
            simple_generators: vec![("e".into(), "h".into(), "f".into())],
            simple_roots: vec![vec![2]],
        }),
    };
    alg.form = derive_invariant_form(&alg, &[(1, 1, RationalFunction::constant(rat(2)))])
        .expect("sl2 carries an invariant form");
    alg
}
