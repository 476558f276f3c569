//! Example divisors with explicit frames.

use super::{DivisorData, DivisorError, FrameElement, FrameElementKind, FreeDivisor, LogCharacter, VectorFieldPoly};
use crate::exact::{int, rat, WeightedPoly};

use FrameElementKind::{Semisimple, Toral, WType};

/// Names accepted by [`catalog`]; parameterized families use call syntax.
pub const CATALOG_NAMES: &[&str] = &[
    "cusp",
    "plane_curve(p,q)",
    "normal_crossing(k)",
    "d4",
    "g2",
    "borel2",
    "sekiguchi_b5",
];

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn poly(w: &[u32], terms: &[(i64, &[u32])]) -> WeightedPoly {
    WeightedPoly::from_int_terms(w, terms)
}

fn field(w: &[u32], terms: &[(i64, &[u32], usize)]) -> VectorFieldPoly {
    VectorFieldPoly::from_int_terms(w, terms)
}

fn parse_args(s: &str, prefix: &str) -> Option<Vec<u32>> {
    let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|t| t.trim().parse().ok()).collect()
}

pub fn catalog(name: &str) -> Result<FreeDivisor, DivisorError> {
    let name = name.trim();
    match name {
        "cusp" => return plane_curve(3, 2),
        "d4" => return d4(),
        "g2" => return g2(),
        "borel2" => return borel2(),
        "sekiguchi_b5" => return sekiguchi_b5(),
        _ => {}
    }
    if let Some(a) = parse_args(name, "plane_curve") {
        if let [p, q] = a[..] {
            return plane_curve(p, q);
        }
    }
    if let Some(a) = parse_args(name, "normal_crossing") {
        if let [k] = a[..] {
            return normal_crossing(k as usize);
        }
    }
    Err(DivisorError::UnknownCatalog(name.to_string()))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `f = x^q − y^p` with weights `(p, q)`, frame `E`, `V = −f_y ∂x + f_x ∂y`.
pub fn plane_curve(p: u32, q: u32) -> Result<FreeDivisor, DivisorError> {
    if p == 0 || q == 0 || gcd(p, q) != 1 || p * q <= p + q {
        return Err(DivisorError::UnknownCatalog(format!(
            "plane_curve({p},{q}) needs coprime p, q with pq > p + q"
        )));
    }
    let w = [p, q];
    let f = poly(&w, &[(1, &[q, 0]), (-1, &[0, p])]);
    let fx = f.partial_derivative(0);
    let fy = f.partial_derivative(1);
    let v = VectorFieldPoly::new(vec![-&fy, fx]);
    let n = (p * q) as i64;
    let name = if (p, q) == (3, 2) { "cusp".to_string() } else { format!("plane_curve({p},{q})") };
    FreeDivisor::new(DivisorData {
        name,
        variables: names(&["x", "y"]),
        weights: w.to_vec(),
        f,
        degree: (p * q) as u64,
        frame: vec![
            FrameElement::new("E", Toral, VectorFieldPoly::euler(&w)).distinguished(),
            FrameElement::new("V", WType { grade: n - p as i64 - q as i64 }, v),
        ],
        euler_combination: None,
        log_characters: None,
    })
}

/// `z_1 ⋯ z_k = 0` with frame `z_i ∂_i`.
pub fn normal_crossing(k: usize) -> Result<FreeDivisor, DivisorError> {
    if k == 0 {
        return Err(DivisorError::UnknownCatalog("normal_crossing(0)".into()));
    }
    let w = vec![1u32; k];
    let f = WeightedPoly::term(&w, crate::exact::Monomial::new(vec![1; k]), int(1));
    let frame = (0..k)
        .map(|i| {
            let mut e = vec![0u32; k];
            e[i] = 1;
            FrameElement::new(&format!("E{}", i + 1), Toral, field(&w, &[(1, &e, i)]))
        })
        .collect();
    let chars = (0..k)
        .map(|i| LogCharacter::new(vec![(int(1), WeightedPoly::var(&w, i))]))
        .collect();
    FreeDivisor::new(DivisorData {
        name: format!("normal_crossing({k})"),
        variables: (1..=k).map(|i| format!("z{i}")).collect(),
        weights: w,
        f,
        degree: k as u64,
        frame,
        euler_combination: Some(vec![int(1); k]),
        log_characters: Some(chars),
    })
}

/// Triple of planes in `(C²)³` under `(C*)³ × SL₂`.
pub fn d4() -> Result<FreeDivisor, DivisorError> {
    let w = [1u32; 6];
    let e = |i: usize| {
        let mut v = [0u32; 6];
        v[i] = 1;
        v
    };
    // u = (0,1), v = (2,3), w = (4,5)
    let wedge = |a: usize, b: usize| poly(&w, &[(1, &add(e(a), e(b + 1))), (-1, &add(e(a + 1), e(b)))]);
    let g1 = wedge(0, 2);
    let g2 = wedge(2, 4);
    let g3 = wedge(4, 0);
    let f = &(&g1 * &g2) * &g3;
    let scaling = |p: usize| field(&w, &[(1, &e(p), p), (1, &e(p + 1), p + 1)]);
    let mut h = Vec::new();
    let mut up = Vec::new();
    let mut down = Vec::new();
    for p in [0, 2, 4] {
        h.push((1, e(p), p));
        h.push((-1, e(p + 1), p + 1));
        up.push((1, e(p + 1), p));
        down.push((1, e(p), p + 1));
    }
    let as_field = |t: &[(i64, [u32; 6], usize)]| {
        let refs: Vec<(i64, &[u32], usize)> = t.iter().map(|(c, m, i)| (*c, &m[..], *i)).collect();
        field(&w, &refs)
    };
    let half = rat(1, 2);
    let ch = |a: i64, b: i64, c: i64| {
        LogCharacter::new(vec![
            (&half * &int(a), g1.clone()),
            (&half * &int(b), g2.clone()),
            (&half * &int(c), g3.clone()),
        ])
    };
    FreeDivisor::new(DivisorData {
        name: "d4".into(),
        variables: names(&["u1", "u2", "v1", "v2", "w1", "w2"]),
        weights: w.to_vec(),
        f,
        degree: 6,
        frame: vec![
            FrameElement::new("Eu", Toral, scaling(0)),
            FrameElement::new("Ev", Toral, scaling(2)),
            FrameElement::new("Ew", Toral, scaling(4)),
            FrameElement::new("Vh", Semisimple, as_field(&h)),
            FrameElement::new("Ve", Semisimple, as_field(&up)),
            FrameElement::new("Vf", Semisimple, as_field(&down)),
        ],
        euler_combination: Some(vec![int(1); 3]),
        log_characters: Some(vec![ch(1, -1, 1), ch(1, 1, -1), ch(-1, 1, 1)]),
    })
}

fn add(a: [u32; 6], b: [u32; 6]) -> [u32; 6] {
    let mut out = a;
    for i in 0..6 {
        out[i] += b[i];
    }
    out
}

/// Discriminant of binary cubics `x e1³ + y e1²e2 + z e1e2² + w e2³`.
pub fn g2() -> Result<FreeDivisor, DivisorError> {
    let w = [3u32; 4];
    let f = poly(
        &w,
        &[
            (27, &[2, 0, 0, 2]),
            (-18, &[1, 1, 1, 1]),
            (4, &[0, 3, 0, 1]),
            (4, &[1, 0, 3, 0]),
            (-1, &[0, 2, 2, 0]),
        ],
    );
    let vh = field(
        &w,
        &[(3, &[1, 0, 0, 0], 0), (1, &[0, 1, 0, 0], 1), (-1, &[0, 0, 1, 0], 2), (-3, &[0, 0, 0, 1], 3)],
    );
    let vf = field(&w, &[(3, &[1, 0, 0, 0], 1), (2, &[0, 1, 0, 0], 2), (1, &[0, 0, 1, 0], 3)]);
    let ve = field(&w, &[(1, &[0, 1, 0, 0], 0), (2, &[0, 0, 1, 0], 1), (3, &[0, 0, 0, 1], 2)]);
    FreeDivisor::new(DivisorData {
        name: "g2".into(),
        variables: names(&["x", "y", "z", "w"]),
        weights: w.to_vec(),
        f,
        degree: 12,
        frame: vec![
            FrameElement::new("E", Toral, VectorFieldPoly::euler(&w)).distinguished(),
            FrameElement::new("Vh", Semisimple, vh),
            FrameElement::new("Vf", Semisimple, vf),
            FrameElement::new("Ve", Semisimple, ve),
        ],
        euler_combination: None,
        log_characters: None,
    })
}

/// `x(y² − xz)` on symmetric 2×2 matrices under the Borel subgroup.
pub fn borel2() -> Result<FreeDivisor, DivisorError> {
    let w = [2u32; 3];
    let x = WeightedPoly::var(&w, 0);
    let q = poly(&w, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])]);
    let f = poly(&w, &[(1, &[1, 2, 0]), (-1, &[2, 0, 1])]);
    let half = rat(1, 2);
    FreeDivisor::new(DivisorData {
        name: "borel2".into(),
        variables: names(&["x", "y", "z"]),
        weights: w.to_vec(),
        f,
        degree: 6,
        frame: vec![
            FrameElement::new("E1", Toral, field(&w, &[(2, &[1, 0, 0], 0), (1, &[0, 1, 0], 1)])),
            FrameElement::new("E2", Toral, field(&w, &[(1, &[0, 1, 0], 1), (2, &[0, 0, 1], 2)])),
            FrameElement::new("V", WType { grade: 0 }, field(&w, &[(1, &[1, 0, 0], 1), (2, &[0, 1, 0], 2)])),
        ],
        euler_combination: Some(vec![int(1), int(1)]),
        log_characters: Some(vec![
            LogCharacter::new(vec![(half.clone(), x.clone())]),
            LogCharacter::new(vec![(half.clone(), q), (-half, x)]),
        ]),
    })
}

/// `xy⁴ + y³z + z³` with weights `(1, 2, 3)`.
pub fn sekiguchi_b5() -> Result<FreeDivisor, DivisorError> {
    let w = [1u32, 2, 3];
    let f = poly(&w, &[(1, &[1, 4, 0]), (1, &[0, 3, 1]), (1, &[0, 0, 3])]);
    let v = field(
        &w,
        &[
            (2, &[0, 1, 0], 0),
            (-24, &[1, 1, 0], 1),
            (2, &[0, 0, 1], 1),
            (-2, &[0, 2, 0], 2),
            (-32, &[1, 0, 1], 2),
        ],
    );
    let ww = field(&w, &[(3, &[0, 0, 1], 0), (-9, &[0, 2, 0], 1), (-12, &[0, 1, 1], 2)]);
    FreeDivisor::new(DivisorData {
        name: "sekiguchi_b5".into(),
        variables: names(&["x", "y", "z"]),
        weights: w.to_vec(),
        f,
        degree: 9,
        frame: vec![
            FrameElement::new("E", Toral, VectorFieldPoly::euler(&w)).distinguished(),
            FrameElement::new("V", WType { grade: 1 }, v),
            FrameElement::new("W", WType { grade: 2 }, ww),
        ],
        euler_combination: None,
        log_characters: None,
    })
}
