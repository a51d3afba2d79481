use std::cmp::Ordering;

/// Exponent vector over the generators in their fixed order. Ordered
/// graded-lex: higher total degree first, then lexicographic with the first
/// generator most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PbwMonomial(Vec<u32>);

impl PbwMonomial {
    pub fn unit(dim: usize) -> Self {
        PbwMonomial(vec![0; dim])
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        let mut m = Self::unit(dim);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        PbwMonomial(exps)
    }

    /// From a word already in non-decreasing order (or any word, read as a
    /// multiset).
    pub fn from_word(dim: usize, word: &[usize]) -> Self {
        let mut m = Self::unit(dim);
        for &i in word {
            m.0[i] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|e| *e as usize).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    /// Largest generator index present.
    pub fn last(&self) -> Option<usize> {
        self.0.iter().rposition(|e| *e > 0)
    }

    pub fn with_inc(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.0[i] += 1;
        m
    }

    pub fn with_dec(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.0[i] -= 1;
        m
    }

    /// The ordered word `X_0^e0 X_1^e1 ...`.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree());
        for (i, e) in self.0.iter().enumerate() {
            w.extend(std::iter::repeat_n(i, *e as usize));
        }
        w
    }

    /// Every monomial of total degree at most `bound`, ascending.
    pub fn all_up_to(dim: usize, bound: usize) -> Vec<PbwMonomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; dim];
        fn rec(i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<PbwMonomial>) {
            if i == cur.len() {
                out.push(PbwMonomial(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e as u32;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, bound, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
