use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::{Error, Result};

/// A vertex coloring with colors `1..=q`, every color used at least once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    q: usize,
}

impl Coloring {
    /// `colors[v]` in `1..=q` where `q` is the largest color; rejects gaps.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let q = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; q + 1];
        for &c in &colors {
            if c == 0 {
                return Err(Error::ColorUnused { color: 0 });
            }
            used[c] = true;
        }
        for c in 1..=q {
            if !used[c] {
                return Err(Error::ColorUnused { color: c });
            }
        }
        Ok(Coloring { colors, q })
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Number of colors used.
    pub fn num_colors(&self) -> usize {
        self.q
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Endpoints of every edge receive distinct colors.
    pub fn is_proper(&self, g: &Graph) -> bool {
        assert_eq!(g.n(), self.colors.len());
        g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_gaps_and_properness() {
        let g = Graph::path(3);
        let c = Coloring::new(vec![1, 2, 1]).unwrap();
        assert_eq!(c.num_colors(), 2);
        assert!(c.is_proper(&g));
        assert!(!Coloring::new(vec![1, 1, 1]).unwrap().is_proper(&g));
        assert_eq!(
            Coloring::new(vec![1, 3, 1]).unwrap_err(),
            Error::ColorUnused { color: 2 }
        );
        assert_eq!(Coloring::new(vec![]).unwrap().num_colors(), 0);
    }
}
