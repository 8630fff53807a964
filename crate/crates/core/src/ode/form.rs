use serde::Serialize;

use crate::dickson::{first_kind, third_kind};
use crate::error::{Error, Result};
use crate::exactalg::{ParamPoly, UniPolyA};

/// `p y'' + q y' + r y = s` with coefficients polynomial in `x` and `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OdeForm {
    p: ParamPoly,
    q: ParamPoly,
    r: ParamPoly,
    s: ParamPoly,
}

impl OdeForm {
    pub fn new(p: ParamPoly, q: ParamPoly, r: ParamPoly, s: ParamPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(Self { p, q, r, s })
    }

    pub fn homogeneous(p: ParamPoly, q: ParamPoly, r: ParamPoly) -> Result<Self> {
        Self::new(p, q, r, ParamPoly::zero())
    }

    pub fn p(&self) -> &ParamPoly {
        &self.p
    }
    pub fn q(&self) -> &ParamPoly {
        &self.q
    }
    pub fn r(&self) -> &ParamPoly {
        &self.r
    }
    pub fn s(&self) -> &ParamPoly {
        &self.s
    }

    pub fn is_homogeneous(&self) -> bool {
        self.s.is_zero()
    }

    /// The same operator with the right-hand side dropped.
    pub fn associated_homogeneous(&self) -> Self {
        Self {
            s: ParamPoly::zero(),
            ..self.clone()
        }
    }

    /// Substitutes a fixed rational for `a` in every coefficient.
    pub fn specialize_a(&self, a: &num_rational::BigRational) -> Self {
        Self {
            p: self.p.specialize_a(a),
            q: self.q.specialize_a(a),
            r: self.r.specialize_a(a),
            s: self.s.specialize_a(a),
        }
    }

    /// `p y'' + q y' + r y - s`, exactly.
    pub fn residual(&self, y: &ParamPoly) -> ParamPoly {
        let dy = y.derivative();
        let ddy = dy.derivative();
        let lhs = &(&(&self.p * &ddy) + &(&self.q * &dy)) + &(&self.r * y);
        &lhs - &self.s
    }
}

pub fn ode_residual(y: &ParamPoly, form: &OdeForm) -> ParamPoly {
    form.residual(y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KnownOde {
    /// `(x^2-4a) y'' + x y' - n^2 y = 0`, solved by `D_n`
    First,
    /// `(x^2-4a) y'' + 3x y' - n(n+2) y = 0`, solved by `E_n`
    Second,
    /// `(x^2-4a) y'' + 3x y' - n^2 y = 2n D_n`, solved by `F_n`
    ThirdNonhomogeneous,
}

/// `x^2 - 4a`
pub fn singular_factor() -> ParamPoly {
    &ParamPoly::x().pow(2) - &ParamPoly::a().scale(&UniPolyA::from_int(4))
}

pub fn known_form(kind: KnownOde, n: usize) -> Result<OdeForm> {
    if n == 0 {
        return Err(Error::UnsupportedIndex(0));
    }
    let ni = i64::try_from(n).map_err(|_| Error::UnsupportedIndex(n))?;
    let x = ParamPoly::x();
    let p = singular_factor();
    let (q, r, s) = match kind {
        KnownOde::First => (x, ParamPoly::from_int(-ni * ni), ParamPoly::zero()),
        KnownOde::Second => (
            ParamPoly::from_int(3) * x,
            ParamPoly::from_int(-ni * (ni + 2)),
            ParamPoly::zero(),
        ),
        KnownOde::ThirdNonhomogeneous => (
            ParamPoly::from_int(3) * x,
            ParamPoly::from_int(-ni * ni),
            first_kind(n).scale(&UniPolyA::from_int(2 * ni)),
        ),
    };
    OdeForm::new(p, q, r, s)
}

/// Whether `F_n` satisfies the non-homogeneous equation identically in `x` and `a`.
pub fn verify_lemma_third(n: usize) -> Result<bool> {
    let form = known_form(KnownOde::ThirdNonhomogeneous, n)?;
    Ok(form.residual(&third_kind(n)).is_zero())
}

/// Outcome of one exact identity check within a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub n: usize,
    pub holds: bool,
    /// `None` when the residual vanishes.
    pub residual: Option<ParamPoly>,
}

/// Residual of the given family against its known ODE for `n = 1..=n_max`.
pub fn verify_known_range(kind: KnownOde, n_max: usize) -> Vec<IdentityCheck> {
    crate::sweep::map((1..=n_max).collect(), |n| {
        let family = match kind {
            KnownOde::First => first_kind(n),
            KnownOde::Second => crate::dickson::second_kind(n),
            KnownOde::ThirdNonhomogeneous => third_kind(n),
        };
        let form = known_form(kind, n).expect("n >= 1");
        let residual = form.residual(&family);
        IdentityCheck {
            n,
            holds: residual.is_zero(),
            residual: (!residual.is_zero()).then_some(residual),
        }
    })
}
