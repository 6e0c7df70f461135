//! Isomorphism search for relational structures.

use super::RelFa;

fn signature(a: &RelFa, x: usize) -> (bool, bool, usize, usize, usize, usize) {
    let mut first = 0;
    let mut second = 0;
    let mut result = 0;
    for (p, q, r) in a.mu().iter() {
        first += usize::from(p == x);
        second += usize::from(q == x);
        result += usize::from(r == x);
    }
    (a.is_unit(x), a.is_counit(x), first, second, result, a.mu().get(x, x).len())
}

/// A bijection `p` with μ_b(p x, p y) = p μ_a(x, y), p η_a = η_b and
/// p ε_a = ε_b, if one exists.
pub fn relfa_isomorphism(a: &RelFa, b: &RelFa) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.mu().len() != b.mu().len() {
        return None;
    }
    let sa: Vec<_> = (0..n).map(|x| signature(a, x)).collect();
    let sb: Vec<_> = (0..n).map(|x| signature(b, x)).collect();
    let mut p = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(a, b, &sa, &sb, 0, &mut p, &mut used) {
        Some(p)
    } else {
        None
    }
}

fn consistent(a: &RelFa, b: &RelFa, p: &[usize], x: usize) -> bool {
    // all cells whose operands are among 0..=x
    for y in 0..=x {
        for (u, v) in [(x, y), (y, x)] {
            let ra = a.mu().get(u, v);
            let rb = b.mu().get(p[u], p[v]);
            if ra.len() != rb.len() {
                return false;
            }
            if ra.iter().any(|&z| z <= x && !b.mu().contains(p[u], p[v], p[z])) {
                return false;
            }
        }
    }
    true
}

fn search(
    a: &RelFa,
    b: &RelFa,
    sa: &[(bool, bool, usize, usize, usize, usize)],
    sb: &[(bool, bool, usize, usize, usize, usize)],
    x: usize,
    p: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if x == a.len() {
        return a.mu().iter().all(|(u, v, w)| b.mu().contains(p[u], p[v], p[w]));
    }
    for y in 0..b.len() {
        if used[y] || sa[x] != sb[y] {
            continue;
        }
        p[x] = y;
        used[y] = true;
        if consistent(a, b, p, x) && search(a, b, sa, sb, x + 1, p, used) {
            return true;
        }
        used[y] = false;
    }
    p[x] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{chain, group_algebra, GroupTable};

    #[test]
    fn relabelled_structure_is_isomorphic() {
        let a = chain(3).to_relfa();
        let b = a.permuted(&[2, 0, 3, 1]);
        let p = relfa_isomorphism(&a, &b).unwrap();
        assert!(a.mu().iter().all(|(x, y, z)| b.mu().contains(p[x], p[y], p[z])));
    }

    #[test]
    fn z4_and_klein_differ() {
        let z4 = group_algebra(&GroupTable::cyclic(4));
        let klein = crate::algebra::catalog::boolean(2);
        assert!(relfa_isomorphism(&z4, &klein.to_relfa()).is_none());
    }
}
