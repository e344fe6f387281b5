use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::matrix::RationalMatrix;
use crate::partition::Partition;

/// Adjacency lists of `K_{n_1,...,n_t}`: vertices are adjacent exactly when
/// they lie in different parts.
pub fn adjacency(p: &Partition) -> Vec<Vec<usize>> {
    let part = p.vertex_parts();
    (0..p.n())
        .map(|u| (0..p.n()).filter(|&v| part[u] != part[v]).collect())
        .collect()
}

fn distances_from(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].map(|d| d + 1);
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Entrywise squares of breadth-first-search distances.
pub fn bfs_distance_matrix(p: &Partition) -> RationalMatrix {
    let adj = adjacency(p);
    let rows: Vec<Vec<Option<usize>>> = (0..p.n()).map(|u| distances_from(&adj, u)).collect();
    RationalMatrix::from_fn(p.n(), |u, v| {
        // Every K_{n_1,...,n_t} with t >= 2 is connected.
        let d = rows[u][v].expect("complete multipartite graphs are connected");
        BigRational::from_integer(BigInt::from(d * d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::build_delta;

    fn p(sizes: &[i64]) -> Partition {
        Partition::new(sizes).unwrap()
    }

    #[test]
    fn matches_block_form() {
        assert_eq!(bfs_distance_matrix(&p(&[2, 2])), build_delta(&p(&[2, 2])));
    }

    #[test]
    fn complete_graph() {
        let m = bfs_distance_matrix(&p(&[1, 1, 1]));
        let expected =
            RationalMatrix::from_integers(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(m, expected);
    }

    #[test]
    fn diameter_two() {
        let m = bfs_distance_matrix(&p(&[5, 3]));
        let one = BigRational::from_integer(1.into());
        let four = BigRational::from_integer(4.into());
        for u in 0..8 {
            for v in (0..8).filter(|&v| v != u) {
                let e = m.get(u, v);
                assert!(*e == one || *e == four);
            }
        }
    }
}
