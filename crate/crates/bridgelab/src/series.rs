//! Exact big-integer counting sequences and high-precision ratios: rooted
//! trees, unlabelled trees and forests, labelled forests, and the derived
//! convergents.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratio::Ratio;

pub const SEQ_CAP: usize = 1000;
pub const LABELLED_FORESTS_CAP: usize = 400;
pub const FRAG_CAP: usize = 60;

/// A positive integer sequence indexed from n = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    name: String,
    values: Vec<BigUint>,
}

impl Sequence {
    fn new(name: impl Into<String>, values: Vec<BigUint>) -> Self {
        Sequence {
            name: name.into(),
            values,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn nmax(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, n: usize) -> &BigUint {
        &self.values[n - 1]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// b-file style lines `n value`.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{} {}\n", i + 1, v));
        }
        out
    }
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n == 0 || n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    Ok(())
}

/// Rooted unlabelled trees r(n): r(1) = 1 and
/// (n-1) r(n) = sum_{j=1}^{n-1} (sum_{d|j} d r(d)) r(n-j).
#[allow(clippy::needless_range_loop)] // divisor sums index by value
pub fn rooted_trees_seq(nmax: usize) -> Result<Sequence> {
    check_cap("rooted tree sequence", nmax, SEQ_CAP)?;
    let mut r = vec![BigUint::zero(); nmax + 1];
    let mut s = vec![BigUint::zero(); nmax + 1]; // s[j] = sum_{d|j} d r(d)
    r[1] = BigUint::one();
    s[1] = BigUint::one();
    for n in 2..=nmax {
        let mut total = BigUint::zero();
        for j in 1..n {
            total += &s[j] * &r[n - j];
        }
        let nm1 = BigUint::from(n - 1);
        assert!((&total % &nm1).is_zero(), "rooted tree recurrence divides");
        r[n] = total / nm1;
        let mut sn = BigUint::zero();
        for d in 1..=n {
            if n % d == 0 {
                sn += BigUint::from(d) * &r[d];
            }
        }
        s[n] = sn;
    }
    Ok(Sequence::new("rooted-trees", r[1..].to_vec()))
}

/// Unlabelled trees t(n) from rooted counts by the dissimilarity identity:
/// t(n) = r(n) - (1/2) sum_{i+j=n} r(i) r(j) + r(n/2)/2 for even n.
pub fn otter_trees_seq(nmax: usize) -> Result<Sequence> {
    check_cap("tree sequence", nmax, SEQ_CAP)?;
    let rooted = rooted_trees_seq(nmax)?;
    let r = |i: usize| rooted.value(i);
    let mut t = Vec::with_capacity(nmax);
    for n in 1..=nmax {
        // integer form: subtract the i < n/2 products once each, and
        // choose(r(n/2), 2) when n is even
        let mut sub = BigUint::zero();
        for i in 1..=(n - 1) / 2 {
            sub += r(i) * r(n - i);
        }
        if n % 2 == 0 {
            let h = r(n / 2);
            sub += h * (h - BigUint::one()) / BigUint::from(2u32);
        }
        assert!(r(n) >= &sub, "dissimilarity identity keeps t(n) positive");
        t.push(r(n) - sub);
    }
    Ok(Sequence::new("trees", t))
}

/// Euler transform: multisets of connected structures. With c(n) =
/// sum_{d|n} d t(d), the output satisfies n f(n) = c(n) + sum c(k) f(n-k).
#[allow(clippy::needless_range_loop)] // divisor sums index by value
pub fn euler_transform(t: &Sequence) -> Sequence {
    let nmax = t.nmax();
    let mut c = vec![BigUint::zero(); nmax + 1];
    for n in 1..=nmax {
        for d in 1..=n {
            if n % d == 0 {
                c[n] += BigUint::from(d) * t.value(d);
            }
        }
    }
    let mut f = vec![BigUint::zero(); nmax + 1];
    for n in 1..=nmax {
        let mut total = c[n].clone();
        for k in 1..n {
            total += &c[k] * &f[n - k];
        }
        let nn = BigUint::from(n);
        assert!((&total % &nn).is_zero(), "euler transform divides");
        f[n] = total / nn;
    }
    Sequence::new(format!("euler({})", t.name()), f[1..].to_vec())
}

/// Unlabelled forests: Euler transform of the tree counts.
pub fn unlabelled_forests_seq(nmax: usize) -> Result<Sequence> {
    let mut f = euler_transform(&otter_trees_seq(nmax)?);
    f.name = "forests-unlabelled".into();
    Ok(f)
}

/// Labelled trees on k vertices: 1 for k = 1, else k^(k-2).
fn labelled_trees_on(k: usize) -> BigUint {
    if k == 1 {
        BigUint::one()
    } else {
        BigUint::from(k).pow(k as u32 - 2)
    }
}

/// Labelled forests with every component at most `cap` vertices (usize::MAX
/// for unbounded), values for 0..=nmax. Recurrence over the component of the
/// lowest-labelled vertex:
/// f(n) = sum_k binom(n-1, k-1) k^(k-2) f(n-k).
fn labelled_forests_capped(nmax: usize, cap: usize) -> Vec<BigUint> {
    let mut f = vec![BigUint::zero(); nmax + 1];
    f[0] = BigUint::one();
    for n in 1..=nmax {
        let mut total = BigUint::zero();
        let mut binom = BigUint::one(); // binom(n-1, k-1), starting at k = 1
        for k in 1..=n {
            if k <= cap {
                total += &binom * labelled_trees_on(k) * &f[n - k];
            }
            // binom(n-1, k) = binom(n-1, k-1) (n-k) / k
            binom = binom * BigUint::from(n - k) / BigUint::from(k);
        }
        f[n] = total;
    }
    f
}

/// Labelled forests f(n) for n = 1..=nmax.
pub fn labelled_forests_seq(nmax: usize) -> Result<Sequence> {
    check_cap("labelled forest sequence", nmax, LABELLED_FORESTS_CAP)?;
    let f = labelled_forests_capped(nmax, usize::MAX);
    Ok(Sequence::new("forests-labelled", f[1..].to_vec()))
}

/// Exact ratio of unlabelled trees to unlabelled forests at n.
pub fn tau_ratio(n: usize) -> Result<Ratio> {
    check_cap("tau ratio", n, SEQ_CAP)?;
    let t = otter_trees_seq(n)?;
    let f = euler_transform(&t);
    Ok(Ratio::new(t.value(n).clone(), f.value(n).clone()))
}

/// Exact ratio of labelled trees n^(n-2) to labelled forests at n >= 2.
pub fn renyi_ratio(n: usize) -> Result<Ratio> {
    check_cap("labelled tree/forest ratio", n, LABELLED_FORESTS_CAP)?;
    if n < 2 {
        return Err(Error::CapExceeded {
            what: "labelled tree/forest ratio (needs n >= 2)",
            n,
            cap: LABELLED_FORESTS_CAP,
        });
    }
    let f = labelled_forests_seq(n)?;
    Ok(Ratio::new(labelled_trees_on(n), f.value(n).clone()))
}

/// Exact E[frag] for a uniform labelled forest on n vertices:
/// n - sum_s s * P(largest component has s vertices), with the capped-size
/// recurrence supplying P(max <= s).
pub fn labelled_forest_frag_expectation(n: usize) -> Result<Ratio> {
    check_cap("labelled forest fragment expectation", n, FRAG_CAP)?;
    let total = labelled_forests_capped(n, usize::MAX)[n].clone();
    let mut expected_max = BigUint::zero();
    let mut prev = BigUint::zero(); // f(n, max <= s-1), zero at s = 0 for n >= 1
    for s in 1..=n {
        let cur = labelled_forests_capped(n, s)[n].clone();
        expected_max += BigUint::from(s) * (&cur - &prev);
        prev = cur;
    }
    let num = BigUint::from(n) * &total - expected_max;
    Ok(Ratio::new(num, total))
}
