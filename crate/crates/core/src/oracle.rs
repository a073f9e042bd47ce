//! Brute-force deciders used to cross-check the reductions. Nothing here
//! calls into `solve` or the reduction builders.

use crate::reduce::{Graph, X3cInstance};

/// First `q`-subset of triples (lexicographic, 1-based) that partitions
/// `[3q]`.
pub fn x3c_oracle(x: &X3cInstance) -> Option<Vec<usize>> {
    let (q, m) = (x.q(), x.m());
    if q > m {
        return None;
    }
    let mut pick: Vec<usize> = (0..q).collect();
    loop {
        let mut seen = vec![false; 3 * q + 1];
        let mut ok = true;
        'outer: for &j in &pick {
            for &e in &x.triples()[j] {
                if seen[e] {
                    ok = false;
                    break 'outer;
                }
                seen[e] = true;
            }
        }
        if ok {
            return Some(pick.iter().map(|j| j + 1).collect());
        }
        // Advance to the next combination.
        let mut i = q;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if pick[i] < m - q + i {
                break;
            }
        }
        pick[i] += 1;
        for t in i + 1..q {
            pick[t] = pick[t - 1] + 1;
        }
    }
}

/// First Hamiltonian cycle in lexicographic order that starts at vertex 1.
pub fn hamiltonian_oracle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let mut adj = vec![vec![false; n + 1]; n + 1];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut path = vec![1];
    let mut used = vec![false; n + 1];
    used[1] = true;
    extend(&adj, n, &mut path, &mut used).then_some(path)
}

fn extend(adj: &[Vec<bool>], n: usize, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let last = *path.last().unwrap();
    if path.len() == n {
        return adj[last][1];
    }
    for v in 2..=n {
        if used[v] || !adj[last][v] {
            continue;
        }
        used[v] = true;
        path.push(v);
        if extend(adj, n, path, used) {
            return true;
        }
        path.pop();
        used[v] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x3c_examples() {
        let x = X3cInstance::new(2, vec![[1, 3, 5], [2, 5, 6], [2, 4, 6], [1, 2, 4]]).unwrap();
        assert_eq!(x3c_oracle(&x), Some(vec![1, 3]));
        let x = X3cInstance::new(1, vec![[1, 2, 3]]).unwrap();
        assert_eq!(x3c_oracle(&x), Some(vec![1]));
        let x = X3cInstance::new(2, vec![[1, 2, 3], [1, 2, 4]]).unwrap();
        assert_eq!(x3c_oracle(&x), None);
        let x = X3cInstance::new(2, vec![[1, 2, 3]]).unwrap();
        assert_eq!(x3c_oracle(&x), None);
    }

    #[test]
    fn x3c_lexicographic_first() {
        let x = X3cInstance::new(2, vec![[1, 2, 3], [4, 5, 6], [1, 2, 4], [3, 5, 6]]).unwrap();
        assert_eq!(x3c_oracle(&x), Some(vec![1, 2]));
        let x = X3cInstance::new(2, vec![[1, 2, 4], [1, 2, 3], [3, 5, 6], [4, 5, 6]]).unwrap();
        assert_eq!(x3c_oracle(&x), Some(vec![1, 3]));
    }

    #[test]
    fn hamiltonian_examples() {
        let k3 = Graph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(hamiltonian_oracle(&k3), Some(vec![1, 2, 3]));
        let p4 = Graph::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(hamiltonian_oracle(&p4), None);
        let c4 = Graph::new(4, [(1, 3), (3, 2), (2, 4), (4, 1)]).unwrap();
        assert_eq!(hamiltonian_oracle(&c4), Some(vec![1, 3, 2, 4]));
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let outer = (0..5).map(|i| (i + 1, (i + 1) % 5 + 1));
        let spokes = (0..5).map(|i| (i + 1, i + 6));
        let inner = (0..5).map(|i| (i + 6, (i + 2) % 5 + 6));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(hamiltonian_oracle(&g), None);
    }
}
