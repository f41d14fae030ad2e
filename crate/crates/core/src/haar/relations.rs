//! Linear relations among Haar values of one order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{comultiply_visit, quantum_determinant, NCPoly, Word};
use crate::error::{Error, Result};
use crate::normalform::{add_into, std_word, NormalForm, Reducer, StdExponents};
use crate::qfield::Laurent;

/// `sum_i c_i h(s_i) = rhs * h(source)`.
///
/// For relations from the coproduct, `source` is the equation basis
/// element of the same order. For lifted relations, `source` has order
/// one less and `rhs` is 1.
#[derive(Clone, PartialEq)]
pub struct LinearRelation {
    pub order: u32,
    pub source: StdExponents,
    pub comparing: Option<StdExponents>,
    pub coefficients: NormalForm,
    pub rhs: Laurent,
}

impl LinearRelation {
    /// True when `source` is one of the unknowns, i.e. the relation is
    /// homogeneous in the order-`order` values.
    pub fn is_homogeneous(&self) -> bool {
        self.comparing.is_some()
    }

    /// Coefficients with the right-hand side moved to the left when the
    /// relation is homogeneous.
    pub fn homogeneous_coefficients(&self) -> NormalForm {
        let mut c = self.coefficients.clone();
        if self.is_homogeneous() {
            add_into(&mut c, self.source, &-&self.rhs);
        }
        c
    }
}

impl fmt::Display for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs: Vec<String> = self
            .coefficients
            .iter()
            .map(|(e, c)| format!("({c}) h({})", e.monomial_text()))
            .collect();
        let lhs = if lhs.is_empty() { "0".into() } else { lhs.join(" + ") };
        write!(f, "{lhs} = ({}) h({})", self.rhs, self.source.monomial_text())
    }
}

impl fmt::Debug for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearRelation({self})")
    }
}

/// `D_q^m` in the basis of order `m`.
pub fn dq_power_decomposition(m: u32) -> Result<Arc<NormalForm>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<NormalForm>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().unwrap().get(&m) {
        return Ok(r.clone());
    }
    let dq = quantum_determinant(3);
    let power = dq.pow(m, 3);
    let r = Arc::new(Reducer::shared().reduce_poly(&power)?);
    cache.lock().unwrap().insert(m, r.clone());
    Ok(r)
}

/// Counts of a, k, c and g in a letter sequence.
fn corner_counts(z: &[u8]) -> [u32; 4] {
    let mut c = [0; 4];
    for &l in z {
        match l {
            0 => c[0] += 1,
            8 => c[1] += 1,
            2 => c[2] += 1,
            6 => c[3] += 1,
            _ => {}
        }
    }
    c
}

/// Applies `id ⊗ h` to the coproduct of `s_l` and compares the
/// coefficients of `s_j` on both sides.
///
/// Left factors `z` whose column counts exceed `m` cannot be doubly
/// stochastic. Reduction never increases the number of a's and k's nor
/// decreases the number of c's and g's, so a left factor is also dropped
/// once it cannot produce `s_j`.
pub fn derive_linear_relation(l: &StdExponents, j: &StdExponents) -> Result<LinearRelation> {
    derive_with(Reducer::shared(), l, j)
}

pub(crate) fn derive_with(reducer: &Reducer, l: &StdExponents, j: &StdExponents) -> Result<LinearRelation> {
    let m = l.order();
    if j.order() != m {
        return Err(Error::Usage(format!("orders of {l} and {j} differ")));
    }
    let word = std_word(l);
    let letters = word.indices().to_vec();
    let jm = j.counting_matrix();
    let need = [jm.get(0, 0), jm.get(2, 2), jm.get(0, 2), jm.get(2, 0)];
    let len = letters.len();
    // Row-1 and row-3 letters from position t onwards.
    let mut rem = vec![[0u32; 2]; len + 1];
    for t in (0..len).rev() {
        rem[t] = rem[t + 1];
        match letters[t] / 3 {
            0 => rem[t][0] += 1,
            2 => rem[t][1] += 1,
            _ => {}
        }
    }
    let mut keep = |z: &[u8]| {
        let mut cols = [0u32; 3];
        for &x in z {
            cols[(x % 3) as usize] += 1;
        }
        if cols.iter().any(|&c| c > m) {
            return false;
        }
        let [a, k, c, g] = corner_counts(z);
        let t = z.len();
        c <= need[2] && g <= need[3] && a + rem[t][0] >= need[0] && k + rem[t][1] >= need[1]
    };
    let mut pairs: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
    comultiply_visit(&word, &mut keep, &mut |z, y| pairs.push((z.to_vec(), y.to_vec())));

    let mut coefficients = NormalForm::new();
    for (z, y) in pairs {
        let dz = reducer.reduce(&Word::from_indices(3, z))?;
        let Some(d) = dz.get(j) else { continue };
        let ey = reducer.reduce(&Word::from_indices(3, y))?;
        for (e, c) in ey.iter() {
            add_into(&mut coefficients, *e, &(d * c));
        }
    }
    let rhs = dq_power_decomposition(m)?.get(j).cloned().unwrap_or_default();
    Ok(LinearRelation {
        order: m,
        source: *l,
        comparing: Some(*j),
        coefficients,
        rhs,
    })
}

/// `h(s_e) = h(s_e D_q)`, relating an order-`m-1` value to order `m`.
pub fn dq_lift_relation(e: &StdExponents) -> Result<LinearRelation> {
    let w = NCPoly::from_word(std_word(e));
    let p = w.multiply(&quantum_determinant(3));
    let coefficients = Reducer::shared().reduce_poly(&p)?;
    Ok(LinearRelation {
        order: e.order() + 1,
        source: *e,
        comparing: None,
        coefficients,
        rhs: Laurent::one(),
    })
}

/// A relation in which a word of order `m - 1` is multiplied by `D_q`
/// at position `at` (in letters). The result does not depend on `at`
/// because `D_q` is central.
pub fn dq_insert_relation(w: &Word, at: usize) -> Result<NormalForm> {
    let idx = w.indices();
    let left = NCPoly::from_word(Word::from_indices(3, idx[..at].to_vec()));
    let right = NCPoly::from_word(Word::from_indices(3, idx[at..].to_vec()));
    let p = left.multiply(&quantum_determinant(3)).multiply(&right);
    Reducer::shared().reduce_poly(&p)
}

/// Collects relations keyed by `(equation, comparing)` basis pairs.
pub type RelationMap = BTreeMap<(StdExponents, StdExponents), LinearRelation>;
