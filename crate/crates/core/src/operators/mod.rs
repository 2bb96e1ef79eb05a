//! Operators acting on [`AnalyticFunction`]s through jet arithmetic.

mod physical;

pub use physical::{
    battery, op_hamiltonian, op_hamiltonian_expanded, op_hamiltonian_schrodinger, op_ladder,
    op_mass_power, op_momentum_tilde, op_position_tilde, op_reflection, BatteryFunction, Parity,
    Sign, Statistics,
};

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::Result;
use crate::jet::{AnalyticFunction, Jet};

type Apply = dyn Fn(&AnalyticFunction) -> AnalyticFunction + Send + Sync;

/// A linear map between analytic functions.
///
/// `budget` is the number of derivative orders consumed: querying the image
/// at order `k` queries the argument at order `k + budget` at most.
#[derive(Clone)]
pub struct OperatorSpec {
    name: String,
    budget: usize,
    reflects: bool,
    apply: Arc<Apply>,
}

impl fmt::Debug for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OperatorSpec")
            .field("name", &self.name)
            .field("budget", &self.budget)
            .field("reflects", &self.reflects)
            .finish()
    }
}

impl OperatorSpec {
    fn from_parts(
        name: impl Into<String>,
        budget: usize,
        reflects: bool,
        apply: impl Fn(&AnalyticFunction) -> AnalyticFunction + Send + Sync + 'static,
    ) -> Self {
        OperatorSpec {
            name: name.into(),
            budget,
            reflects,
            apply: Arc::new(apply),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn derivative_budget(&self) -> usize {
        self.budget
    }

    /// Whether the operator looks at `f(-x)`.
    pub fn parity_action(&self) -> bool {
        self.reflects
    }

    pub fn apply(&self, f: &AnalyticFunction) -> AnalyticFunction {
        (self.apply)(f)
    }

    /// Value of `(A f)(x)`.
    pub fn apply_at(&self, f: &AnalyticFunction, x: f64) -> Result<Complex64> {
        self.apply(f).eval(x)
    }

    pub fn identity() -> Self {
        Self::from_parts("1", 0, false, |f| f.clone())
    }

    /// `f -> g f` for a function given by its jets.
    pub fn multiplication(
        name: impl Into<String>,
        g: impl Fn(f64, usize) -> Result<Jet> + Send + Sync + 'static,
    ) -> Self {
        let g = Arc::new(g);
        Self::from_parts(name, 0, false, move |f| {
            let (f, g) = (f.clone(), g.clone());
            AnalyticFunction::new(move |x, k| Ok(&g(x, k)? * &f.jet(x, k)?))
        })
    }

    /// `f -> f'`.
    pub fn derivative() -> Self {
        Self::from_parts("d/dx", 1, false, |f| {
            let f = f.clone();
            AnalyticFunction::new(move |x, k| f.jet(x, k + 1)?.derivative())
        })
    }

    /// `f -> f(-x)`.
    pub fn reflection() -> Self {
        Self::from_parts("R", 0, true, |f| {
            let f = f.clone();
            AnalyticFunction::new(move |x, k| Ok(f.jet(-x, k)?.reflect()))
        })
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        let inner = self.clone();
        Self::from_parts(
            format!("({c})*{}", self.name),
            self.budget,
            self.reflects,
            move |f| {
                let g = inner.apply(f);
                AnalyticFunction::new(move |x, k| Ok(g.jet(x, k)?.scale(c)))
            },
        )
    }

    pub fn scaled_real(&self, c: f64) -> Self {
        self.scaled(Complex64::new(c, 0.0))
    }

    pub fn plus(&self, other: &OperatorSpec) -> Self {
        Self::linear(
            self,
            Complex64::new(1.0, 0.0),
            other,
            Complex64::new(1.0, 0.0),
        )
    }

    pub fn minus(&self, other: &OperatorSpec) -> Self {
        Self::linear(
            self,
            Complex64::new(1.0, 0.0),
            other,
            Complex64::new(-1.0, 0.0),
        )
    }

    /// `alpha A + beta B`.
    pub fn linear(a: &OperatorSpec, alpha: Complex64, b: &OperatorSpec, beta: Complex64) -> Self {
        let (a2, b2) = (a.clone(), b.clone());
        Self::from_parts(
            format!("({} + {})", a.name, b.name),
            a.budget.max(b.budget),
            a.reflects || b.reflects,
            move |f| AnalyticFunction::linear_combination(alpha, &a2.apply(f), beta, &b2.apply(f)),
        )
    }

    /// `A B`: apply `B` first.
    pub fn compose(&self, b: &OperatorSpec) -> Self {
        let (a2, b2) = (self.clone(), b.clone());
        Self::from_parts(
            format!("{} {}", self.name, b.name),
            self.budget + b.budget,
            self.reflects || b.reflects,
            move |f| a2.apply(&b2.apply(f)),
        )
    }
}

/// `[A, B] = AB - BA`.
pub fn commutator(a: &OperatorSpec, b: &OperatorSpec) -> OperatorSpec {
    a.compose(b).minus(&b.compose(a))
}

/// `{A, B} = AB + BA`.
pub fn anticommutator(a: &OperatorSpec, b: &OperatorSpec) -> OperatorSpec {
    a.compose(b).plus(&b.compose(a))
}
