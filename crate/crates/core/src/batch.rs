//! Data-parallel batch processing over independent polynomials.
//!
//! With the `parallel` feature (default) work is spread over the rayon
//! thread pool; without it the same functions run sequentially. Output
//! order always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::interlace::{certify_all_real, Verdict};
use crate::poly::Polynomial;
use crate::roots::isolate_real_roots;
use crate::sturm::all_real_rooted_sturm;

/// Ordered map, parallel when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Ordered map, parallel when the `parallel` feature is enabled.
#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    seq_map(items, f)
}

/// Ordered sequential map; the baseline the parallel path is measured
/// against.
pub fn seq_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Verdicts of the three certifiers for one polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodComparison {
    pub interlace: Verdict,
    pub sturm: bool,
    /// Isolation finds `deg P` distinct simple real roots.
    pub isolation: bool,
}

impl MethodComparison {
    /// The interlacing verdict counts as "all real" only when it is
    /// `AllRealDistinct`; unresolved verdicts never agree.
    pub fn agree(&self) -> bool {
        let il = match self.interlace {
            Verdict::AllRealDistinct => true,
            Verdict::NotAllReal | Verdict::Degenerate(_) => false,
            Verdict::HypothesisUnresolved { .. } => return false,
        };
        il == self.sturm && il == self.isolation
    }
}

pub fn compare_methods(p: &Polynomial) -> MethodComparison {
    let n = p.degree().unwrap_or(0);
    let roots = isolate_real_roots(p);
    MethodComparison {
        interlace: certify_all_real(p).verdict,
        sturm: n >= 1 && all_real_rooted_sturm(p),
        isolation: roots.len() == n && roots.all_simple(),
    }
}

/// Runs [`compare_methods`] over a corpus.
pub fn compare_corpus(polys: &[Polynomial]) -> Vec<MethodComparison> {
    par_map(polys, compare_methods)
}

/// Sequential variant of [`compare_corpus`].
pub fn compare_corpus_seq(polys: &[Polynomial]) -> Vec<MethodComparison> {
    seq_map(polys, compare_methods)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let xs: Vec<u64> = (0..1000).collect();
        assert_eq!(par_map(&xs, |x| x * 2), seq_map(&xs, |x| x * 2));
    }

    #[test]
    fn methods_agree_on_small_corpus() {
        let corpus = [
            Polynomial::from_ints(&[1, -3, 0, 1]),
            Polynomial::from_ints(&[1, 0, 1]),
            Polynomial::from_ints(&[2, -3, 0, 1]),
            Polynomial::from_ints(&[1, 0, 0, 1]),
        ];
        let cmp = compare_corpus(&corpus);
        assert!(cmp.iter().all(|c| c.agree()));
        assert_eq!(cmp[0].interlace, Verdict::AllRealDistinct);
    }
}
