use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::arith::{frac, rat, MultiPoly, Rational, RationalFunction, Var};
use crate::{Error, Result};

use super::{derive_invariant_form, BasisElement, Combo, Parity, RootData, SuperAlgebra};

#[derive(Clone, Debug, PartialEq)]
pub enum AlphaMode {
    Symbolic,
    Value(Rational),
}

pub const SIGNS: [[i32; 3]; 8] = [
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [1, -1, -1],
    [-1, 1, 1],
    [-1, 1, -1],
    [-1, -1, 1],
    [-1, -1, -1],
];

pub fn e_index(i: usize) -> usize {
    i
}

pub fn h_index(i: usize) -> usize {
    3 + i
}

pub fn f_index(i: usize) -> usize {
    6 + i
}

pub fn v_index(eps: [i32; 3]) -> usize {
    9 + SIGNS.iter().position(|s| *s == eps).expect("signs are +-1")
}

pub fn v_label(eps: [i32; 3]) -> String {
    format!("v({},{},{})", eps[0], eps[1], eps[2])
}

/// `D(2,1;alpha)`, symbolic in `alpha` or specialised at a rational value.
pub fn d21(mode: AlphaMode) -> Result<SuperAlgebra> {
    static SYMBOLIC: OnceLock<SuperAlgebra> = OnceLock::new();
    let sym = SYMBOLIC.get_or_init(build);
    match mode {
        AlphaMode::Symbolic => Ok(sym.clone()),
        AlphaMode::Value(a) => {
            if a.is_zero() || a == -Rational::one() {
                return Err(Error::InvalidArgument(format!(
                    "alpha must avoid 0 and -1, got {a}"
                )));
            }
            Ok(sym.specialize_alpha(&a))
        }
    }
}

fn build() -> SuperAlgebra {
    let alpha = MultiPoly::var(Var::Alpha);
    let one = MultiPoly::one();
    let c = |n: i64| MultiPoly::from_int(n);
    let half = MultiPoly::constant(frac(1, 2));
    // Coefficients of omega_1, omega_2, omega_3 in the Casimir.
    let coef = [&alpha + &one, c(-1), -&alpha];

    let mut basis = Vec::with_capacity(17);
    for (prefix, sign) in [("E", 2), ("H", 0), ("F", -2)] {
        for i in 0..3 {
            let mut w = vec![0; 3];
            w[i] = sign;
            basis.push(BasisElement {
                label: format!("{prefix}{}", i + 1),
                parity: Parity::Even,
                weight: w,
            });
        }
    }
    for eps in SIGNS {
        basis.push(BasisElement {
            label: v_label(eps),
            parity: Parity::Odd,
            weight: eps.to_vec(),
        });
    }

    let n = basis.len();
    let mut bracket: Vec<Vec<Combo>> = vec![vec![Vec::new(); n]; n];
    let parity: Vec<Parity> = basis.iter().map(|b| b.parity).collect();
    let mut set = |x: usize, y: usize, v: Combo| {
        let s = -Parity::koszul(parity[x], parity[y]) as i64;
        bracket[y][x] = v.iter().map(|(m, w)| (*m, w * &c(s))).collect();
        bracket[x][y] = v;
    };

    for i in 0..3 {
        set(h_index(i), e_index(i), vec![(e_index(i), c(2))]);
        set(h_index(i), f_index(i), vec![(f_index(i), c(-2))]);
        set(e_index(i), f_index(i), vec![(h_index(i), c(1))]);
        for eps in SIGNS {
            let v = v_index(eps);
            set(h_index(i), v, vec![(v, c(eps[i] as i64))]);
            let mut up = eps;
            up[i] = 1;
            if eps[i] == -1 {
                set(e_index(i), v, vec![(v_index(up), c(1))]);
            }
            let mut down = eps;
            down[i] = -1;
            if eps[i] == 1 {
                set(f_index(i), v, vec![(v_index(down), c(1))]);
            }
        }
    }

    let g = |i: usize, a: i32, b: i32| -> Combo {
        match (a, b) {
            (1, 1) => vec![(e_index(i), c(-1))],
            (-1, -1) => vec![(f_index(i), c(1))],
            _ => vec![(h_index(i), half.clone())],
        }
    };
    for eps in SIGNS {
        for gam in SIGNS {
            let beta: Vec<i64> = (0..3)
                .map(|i| if gam[i] == -eps[i] { eps[i] as i64 } else { 0 })
                .collect();
            let scal = [
                &coef[0] * &c(beta[1] * beta[2]),
                &coef[1] * &c(beta[0] * beta[2]),
                &coef[2] * &c(beta[0] * beta[1]),
            ];
            let mut acc = vec![MultiPoly::zero(); n];
            for i in 0..3 {
                if scal[i].is_zero() {
                    continue;
                }
                for (m, w) in g(i, eps[i], gam[i]) {
                    acc[m] += &(&scal[i] * &w);
                }
            }
            bracket[v_index(eps)][v_index(gam)] = super::dense_to_combo(acc);
        }
    }

    let mut casimir = Vec::new();
    for i in 0..3 {
        casimir.push((e_index(i), f_index(i), coef[i].clone()));
        casimir.push((h_index(i), h_index(i), &coef[i] * &half));
        casimir.push((f_index(i), e_index(i), coef[i].clone()));
    }
    // The odd part enters with the sign that makes the tensor ad-invariant
    // for the bracket above under the Koszul rule; the opposite sign is the
    // image under v -> i*v.
    for eps in SIGNS {
        let neg = [-eps[0], -eps[1], -eps[2]];
        let s = -(eps[0] * eps[1] * eps[2]) as i64;
        casimir.push((v_index(eps), v_index(neg), c(s)));
    }

    let hstar = |p: MultiPoly| p.scale(&frac(1, 2));
    let mut hstar_form = vec![vec![MultiPoly::zero(); 3]; 3];
    hstar_form[0][0] = hstar(&alpha + &one);
    hstar_form[1][1] = hstar(c(-1));
    hstar_form[2][2] = hstar(-&alpha);

    let mut positive_roots: Vec<(Vec<i32>, Parity)> = (0..3)
        .map(|i| {
            let mut w = vec![0; 3];
            w[i] = 2;
            (w, Parity::Even)
        })
        .collect();
    for eps in SIGNS.iter().filter(|e| e[0] == 1) {
        positive_roots.push((eps.to_vec(), Parity::Odd));
    }

    let mut alg = SuperAlgebra {
        name: "D(2,1;alpha)".into(),
        basis,
        bracket,
        casimir,
        form: Vec::new(),
        roots: Some(RootData {
            cartan: (0..3).map(h_index).collect(),
            hstar_form,
            positive_roots,
            simple_generators: vec![
                (
                    v_label([1, -1, -1]),
                    "((alpha+1)*H1+H2+alpha*H3)/2".into(),
                    v_label([-1, 1, 1]),
                ),
                ("E2".into(), "H2".into(), "F2".into()),
                ("E3".into(), "H3".into(), "F3".into()),
            ],
            simple_roots: vec![vec![1, -1, -1], vec![0, 2, 0], vec![0, 0, 2]],
        }),
    };

    let cartan_form = [
        RationalFunction::new(c(2), &alpha + &one),
        RationalFunction::constant(rat(-2)),
        RationalFunction::new(c(-2), alpha.clone()),
    ];
    let mut norm = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let v = if i == j {
                cartan_form[i].clone()
            } else {
                RationalFunction::zero()
            };
            norm.push((h_index(i), h_index(j), v));
        }
    }
    alg.form = derive_invariant_form(&alg, &norm).expect("D(2,1;alpha) carries an invariant form");
    alg
}
