//! Named graph families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn is_prime(q: usize) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

impl Graph {
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        Ok(g)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::input(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0);
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        Ok(g)
    }

    /// Paley graph on `Z_q` for a prime `q ≡ 1 (mod 4)`: `i ~ j` iff `i - j`
    /// is a nonzero square mod `q`.
    pub fn paley(q: usize) -> Result<Graph> {
        if !is_prime(q) || q % 4 != 1 {
            return Err(Error::input(format!(
                "Paley order must be a prime ≡ 1 mod 4, got {q}"
            )));
        }
        if q > MAX_VERTICES {
            return Err(Error::input(format!(
                "Paley order {q} exceeds {MAX_VERTICES}"
            )));
        }
        let mut residue = vec![false; q];
        for x in 1..q {
            residue[x * x % q] = true;
        }
        let mut g = Graph::new(q)?;
        for i in 0..q {
            for j in i + 1..q {
                if residue[j - i] {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Mycielskian: vertices `0..n` copy the input, `n + i` is the shadow of
    /// `i` (adjacent to the neighbors of `i`), and `2n` is adjacent to every
    /// shadow.
    pub fn mycielski(&self) -> Result<Graph> {
        let n = self.n();
        if 2 * n + 1 > MAX_VERTICES {
            return Err(Error::input(format!(
                "Mycielskian of a {n}-vertex graph has {} > {MAX_VERTICES} vertices",
                2 * n + 1
            )));
        }
        let mut g = Graph::new(2 * n + 1)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
            g.add_edge(n + u, v);
            g.add_edge(u, n + v);
        }
        for i in 0..n {
            g.add_edge(n + i, 2 * n);
        }
        Ok(g)
    }

    /// `G(n, p)` with each pair `i < j` sampled in order from a ChaCha8
    /// stream keyed by `seed`.
    pub fn random(n: usize, p: f64, seed: u64) -> Result<Graph> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::input(format!(
                "edge probability must be in [0,1], got {p}"
            )));
        }
        let mut g = Graph::new(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union, vertices of `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.n();
        let mut g = self.with_isolated(other.n())?;
        for (u, v) in other.edges() {
            g.add_edge(off + u, off + v);
        }
        Ok(g)
    }

    /// Iterated Mycielskians of `K2`: `levels = 1` is `C5`, `2` the Grötzsch
    /// graph, `3` the 23-vertex graph with χ = 5.
    pub fn mycielski_tower(levels: usize) -> Result<Graph> {
        let mut g = Graph::complete(2)?;
        for _ in 0..levels {
            g = g.mycielski()?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bit, clique_number, independence_number};

    fn is_isomorphic_brute(a: &Graph, b: &Graph) -> bool {
        fn rec(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
            let k = map.len();
            if k == a.n() {
                return true;
            }
            for img in 0..b.n() {
                if used & bit(img) != 0 {
                    continue;
                }
                if (0..k).all(|i| a.has_edge(i, k) == b.has_edge(map[i], img)) {
                    map.push(img);
                    if rec(a, b, map, used | bit(img)) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        a.n() == b.n() && a.edge_count() == b.edge_count() && rec(a, b, &mut Vec::new(), 0)
    }

    #[test]
    fn paley_five_is_c5() {
        let p5 = Graph::paley(5).unwrap();
        assert!(is_isomorphic_brute(&p5, &Graph::cycle(5).unwrap()));
    }

    #[test]
    fn paley_regularity() {
        for q in [5, 13, 17, 29, 37, 41, 53, 61] {
            let g = Graph::paley(q).unwrap();
            assert!((0..q).all(|v| g.degree(v) == (q - 1) / 2), "q={q}");
        }
        assert_eq!(Graph::paley(13).unwrap().degree(0), 6);
    }

    #[test]
    fn paley_rejects_bad_orders() {
        for q in [0, 1, 2, 3, 7, 9, 25, 11, 73] {
            assert!(Graph::paley(q).is_err(), "q={q}");
        }
    }

    #[test]
    fn paley_17_brute_force_no_k4() {
        // Independent oracle: every 4-subset of P17 and its complement.
        let g = Graph::paley(17).unwrap();
        let co = g.complement();
        let mut four_cliques = 0;
        let mut four_indep = 0;
        for a in 0..17 {
            for b in a + 1..17 {
                for c in b + 1..17 {
                    for d in c + 1..17 {
                        let s = [a, b, c, d];
                        let all = |h: &Graph| {
                            s.iter()
                                .enumerate()
                                .all(|(i, &x)| s[i + 1..].iter().all(|&y| h.has_edge(x, y)))
                        };
                        four_cliques += all(&g) as u32;
                        four_indep += all(&co) as u32;
                    }
                }
            }
        }
        assert_eq!((four_cliques, four_indep), (0, 0));
        assert_eq!(clique_number(&g).value, 3);
        assert_eq!(independence_number(&g).value, 3);
    }

    #[test]
    fn mycielski_identities() {
        let c5 = Graph::complete(2).unwrap().mycielski().unwrap();
        assert!(is_isomorphic_brute(&c5, &Graph::cycle(5).unwrap()));

        // Shadow of the lone vertex has no neighbors except the apex.
        let m1 = Graph::new(1).unwrap().mycielski().unwrap();
        assert_eq!(m1.n(), 3);
        assert_eq!(m1.edges(), vec![(1, 2)]);

        let grotzsch = Graph::mycielski_tower(2).unwrap();
        assert_eq!((grotzsch.n(), grotzsch.edge_count()), (11, 20));
        assert!(Graph::new(32).unwrap().mycielski().is_err());
        assert!(Graph::new(31).unwrap().mycielski().is_ok());
    }

    #[test]
    fn random_extremes_and_determinism() {
        assert_eq!(Graph::random(5, 0.0, 7).unwrap().edge_count(), 0);
        assert_eq!(
            Graph::random(5, 1.0, 7).unwrap(),
            Graph::complete(5).unwrap()
        );
        assert_eq!(
            Graph::random(20, 0.5, 11).unwrap(),
            Graph::random(20, 0.5, 11).unwrap()
        );
        assert_ne!(
            Graph::random(20, 0.5, 11).unwrap(),
            Graph::random(20, 0.5, 12).unwrap()
        );
        assert!(Graph::random(5, 1.5, 0).is_err());
    }
}
