use super::FiniteLoop;

/// Oriented Fano lines for the octonion units `e1..e7`: for each `(a, b, c)`,
/// `e_a e_b = e_c` and cyclically, with the reversed products negated.
pub const OCTONION_TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (2, 6, 4),
    (3, 4, 7),
    (2, 5, 7),
    (3, 5, 6),
    (1, 6, 7),
];

const QUATERNION_TRIPLES: [(usize, usize, usize); 1] = [(1, 2, 3)];

pub fn cyclic(n: usize) -> FiniteLoop {
    assert!(n >= 1, "cyclic group of order 0");
    let labels = (0..n).map(|i| i.to_string()).collect();
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    FiniteLoop::from_index_table(labels, table).expect("cyclic group table")
}

/// Product of two imaginary-unit indices (0 is the real unit) as
/// `(negated, unit)`.
fn unit_product(triples: &[(usize, usize, usize)], a: usize, b: usize) -> (bool, usize) {
    if a == 0 {
        return (false, b);
    }
    if b == 0 {
        return (false, a);
    }
    if a == b {
        return (true, 0);
    }
    for &(x, y, z) in triples {
        for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
            if (a, b) == (p, q) {
                return (false, r);
            }
            if (a, b) == (q, p) {
                return (true, r);
            }
        }
    }
    panic!("units {a} and {b} lie on no line");
}

/// The loop `{±1, ±u_1, …}` generated by signed units; element `2u + s`
/// is `(-1)^s u`.
fn signed_unit_loop(units: &[&str], triples: &[(usize, usize, usize)]) -> FiniteLoop {
    let n = 2 * units.len();
    let mut labels = Vec::with_capacity(n);
    for u in units {
        labels.push(u.to_string());
        labels.push(if *u == "1" { "-1".to_string() } else { format!("-{u}") });
    }
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (neg, u) = unit_product(triples, x / 2, y / 2);
            let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
            table.push(2 * u + sign);
        }
    }
    FiniteLoop::from_index_table(labels, table).expect("signed unit table")
}

/// `Q8 = {±1, ±i, ±j, ±k}` with `ij = k`.
pub fn quaternion8() -> FiniteLoop {
    signed_unit_loop(&["1", "i", "j", "k"], &QUATERNION_TRIPLES)
}

/// The Moufang loop of signed octonion units, built from [`OCTONION_TRIPLES`].
pub fn octonion_loop16() -> FiniteLoop {
    signed_unit_loop(&["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"], &OCTONION_TRIPLES)
}

/// Element `(a, b)` sits at index `a * |Q2| + b`.
pub fn direct_product(q1: &FiniteLoop, q2: &FiniteLoop) -> FiniteLoop {
    let (n1, n2) = (q1.order(), q2.order());
    let n = n1 * n2;
    let labels = (0..n)
        .map(|k| format!("({},{})", q1.label(k / n2), q2.label(k % n2)))
        .collect();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(q1.mul(x / n2, y / n2) * n2 + q2.mul(x % n2, y % n2));
        }
    }
    FiniteLoop::from_index_table(labels, table).expect("product of loops")
}

/// The symmetric group on `n` points, elements in lexicographic order of
/// their one-line notation (so the identity comes first), with
/// `(στ)(x) = σ(τ(x))`.
pub fn symmetric(n: usize) -> FiniteLoop {
    assert!(n >= 1);
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    let sep = if n > 9 { "." } else { "" };
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(sep))
        .collect();
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let m = perms.len();
    let mut table = Vec::with_capacity(m * m);
    for s in &perms {
        for t in &perms {
            let st: Vec<usize> = t.iter().map(|&x| s[x]).collect();
            table.push(index(&st));
        }
    }
    FiniteLoop::from_index_table(labels, table).expect("symmetric group table")
}

pub(super) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::LoopProperty;

    #[test]
    fn trivial_loop() {
        let q = cyclic(1);
        assert_eq!(q.order(), 1);
        assert_eq!(q.mul(0, 0), 0);
    }

    #[test]
    fn klein_four() {
        let z2 = cyclic(2);
        let v = direct_product(&z2, &z2);
        assert_eq!(v.order(), 4);
        for x in v.elements() {
            assert_eq!(v.mul(x, x), 0);
            assert_eq!(v.inv(x), x);
        }
        assert_eq!(v.label(3), "(1,1)");
        assert_eq!(v.mul(1, 2), 3);
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion8();
        let i = q.index_of("i").unwrap();
        let j = q.index_of("j").unwrap();
        let k = q.index_of("k").unwrap();
        let m1 = q.index_of("-1").unwrap();
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, k), i);
        assert_eq!(q.mul(k, i), j);
        assert_eq!(q.mul(i, i), m1);
        assert_eq!(q.label(q.mul(j, i)), "-k");
    }

    #[test]
    fn octonion_units_square_to_minus_one() {
        let o = octonion_loop16();
        let m1 = o.index_of("-1").unwrap();
        for u in 2..16 {
            assert_eq!(o.mul(u, u), m1, "{}", o.label(u));
        }
        let e1 = o.index_of("e1").unwrap();
        let e2 = o.index_of("e2").unwrap();
        assert_eq!(o.label(o.mul(e1, e2)), "e3");
        assert_eq!(o.label(o.mul(e2, e1)), "-e3");
    }

    #[test]
    fn symmetric3_is_nonabelian_group() {
        let s = symmetric(3);
        assert_eq!(s.order(), 6);
        assert_eq!(s.label(0), "123");
        assert!(s.check_property(LoopProperty::Associative).holds);
        assert!(!s.check_property(LoopProperty::Commutative).holds);
    }
}
