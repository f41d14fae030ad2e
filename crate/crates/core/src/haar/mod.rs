//! The Haar state on O(SL_q(3)).
//!
//! [`Haar`] computes and caches tables of values on the basis of
//! standard monomials, one order at a time, and evaluates the state on
//! arbitrary words and polynomials through [`reduce`](crate::reduce).

pub mod algorithm;
pub mod closed;
pub mod golden;
pub mod linsolve;
pub mod relations;
pub mod solver;
pub mod symmetry;
mod table;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::One;

pub use relations::{derive_linear_relation, dq_insert_relation, dq_lift_relation, dq_power_decomposition, LinearRelation};
pub use solver::{solve_order, SolveStats};
pub use table::{HaarTable, FORMAT_VERSION};

use crate::algebra::{NcPoly, Word};
use crate::error::{Error, Result};
use crate::normalform::{counting_matrix, Reducer, StdExponents};
use crate::qfield::{Laurent, QRational};

/// How a table is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Solve the full system of coproduct relations.
    Solver,
    /// Follow the staged elimination, one unknown at a time.
    Algorithm,
    /// Closed forms only; fails unless they cover the whole order.
    Closed,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "solver" => Ok(Method::Solver),
            "algorithm" => Ok(Method::Algorithm),
            "closed" => Ok(Method::Closed),
            _ => Err(Error::Usage(format!("unknown method `{s}`"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Solver => "solver",
            Method::Algorithm => "algorithm",
            Method::Closed => "closed",
        })
    }
}

pub(crate) fn order_zero() -> HaarTable {
    HaarTable {
        order: 0,
        values: [(StdExponents::default(), QRational::one())].into_iter().collect(),
    }
}

/// Computes and caches Haar values.
pub struct Haar {
    max_order: u32,
    cache_dir: Option<PathBuf>,
    default_method: Method,
    tables: Mutex<HashMap<(Method, u32), Arc<HaarTable>>>,
}

impl Default for Haar {
    fn default() -> Self {
        Haar::new()
    }
}

impl Haar {
    /// An engine without a disk cache, limited to order 4.
    pub fn new() -> Self {
        Haar {
            max_order: 4,
            cache_dir: None,
            default_method: Method::Solver,
            tables: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_max_order(mut self, m: u32) -> Self {
        self.max_order = m;
        self
    }

    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    pub fn with_default_method(mut self, method: Method) -> Self {
        self.default_method = method;
        self
    }

    pub fn max_order(&self) -> u32 {
        self.max_order
    }

    fn check_order(&self, m: u32) -> Result<()> {
        if m > self.max_order {
            return Err(Error::Usage(format!(
                "order {m} exceeds the configured maximum {}",
                self.max_order
            )));
        }
        Ok(())
    }

    /// The table of order `m`, from memory, the disk cache, or the
    /// default method.
    pub fn table(&self, m: u32) -> Result<Arc<HaarTable>> {
        self.check_order(m)?;
        if let Some(t) = self.tables.lock().unwrap().get(&(self.default_method, m)) {
            return Ok(t.clone());
        }
        if let Some(dir) = &self.cache_dir {
            if let Some(t) = HaarTable::load(dir, m)? {
                let t = Arc::new(t);
                self.tables.lock().unwrap().insert((self.default_method, m), t.clone());
                return Ok(t);
            }
        }
        self.table_with(m, self.default_method)
    }

    /// The table of order `m` computed by `method`. A cached table on
    /// disk, if any, must agree with the recomputation.
    pub fn table_with(&self, m: u32, method: Method) -> Result<Arc<HaarTable>> {
        self.check_order(m)?;
        if let Some(t) = self.tables.lock().unwrap().get(&(method, m)) {
            return Ok(t.clone());
        }
        let t = match (m, method) {
            (0, _) => order_zero(),
            (_, Method::Solver) => solve_order(self, m)?.0,
            (_, Method::Algorithm) => algorithm::full_algorithm(self, m)?.table,
            (_, Method::Closed) => {
                let values = closed::closed_values(m)?;
                let basis = crate::normalform::enumerate_basis(m);
                let missing = basis.iter().filter(|e| !values.contains_key(e)).count();
                if missing > 0 {
                    return Err(Error::Unsupported(format!(
                        "closed forms cover {} of the {} basis monomials of order {m}",
                        basis.len() - missing,
                        basis.len()
                    )));
                }
                HaarTable { order: m, values }
            }
        };
        if let Some(dir) = &self.cache_dir {
            match HaarTable::load(dir, m)? {
                Some(old) if old != t => {
                    return Err(Error::Inconsistent(format!(
                        "cached table of order {m} disagrees with the {method} computation"
                    )));
                }
                Some(_) => {}
                None => t.store(dir)?,
            }
        }
        let t = Arc::new(t);
        self.tables.lock().unwrap().insert((method, m), t.clone());
        Ok(t)
    }

    /// `h` on a basis monomial.
    pub fn basis_value(&self, e: &StdExponents) -> Result<QRational> {
        let t = self.table(e.order())?;
        t.get(e)
            .cloned()
            .ok_or_else(|| Error::Usage(format!("{} is not a basis monomial", e.monomial_text())))
    }

    /// `h` on a linear combination of basis monomials.
    pub fn combination_value(&self, nf: &BTreeMap<StdExponents, Laurent>) -> Result<QRational> {
        let mut acc = QRational::zero();
        for (e, c) in nf {
            acc = acc + c.to_qrational() * self.basis_value(e)?;
        }
        Ok(acc)
    }

    /// `h` on a word. Words whose counting matrix is not doubly
    /// stochastic have value zero.
    pub fn value(&self, w: &Word) -> Result<QRational> {
        if w.n() != 3 {
            return Err(Error::Unsupported("the Haar state is implemented for n = 3".into()));
        }
        let Some(m) = counting_matrix(w).doubly_stochastic_order() else {
            return Ok(QRational::zero());
        };
        self.check_order(m)?;
        let nf = Reducer::shared().reduce(w)?;
        self.combination_value(&nf)
    }

    /// `h` on a polynomial with coefficients in Q(q).
    pub fn value_poly(&self, p: &NcPoly<QRational>) -> Result<QRational> {
        let mut acc = QRational::zero();
        for (w, c) in p.terms() {
            let v = self.value(w)?;
            if !v.is_zero() {
                acc = acc + c * &v;
            }
        }
        Ok(acc)
    }

    /// The value of `h(p)` at `q = 1`.
    pub fn weingarten_limit(&self, p: &NcPoly<QRational>) -> Result<BigRational> {
        self.value_poly(p)?.eval_at(&BigRational::one())
    }
}

/// `h` on a word, with a default engine kept for the process.
pub fn haar(w: &Word) -> Result<QRational> {
    static ENGINE: std::sync::OnceLock<Haar> = std::sync::OnceLock::new();
    ENGINE.get_or_init(Haar::new).value(w)
}
