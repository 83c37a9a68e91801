//! Ring-theoretic and homological invariants of ambiskew algebras:
//! propagated flags, GK dimension, global and injective dimension bounds,
//! and the polynomial-identity criterion with its PI degree.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::ambicore::AmbiskewAlgebra;
use crate::basehopf::{BaseDescriptor, Dim, Family};
use crate::error::{Error, Result};
use crate::hopfstruct::HopfAmbiskew;
use crate::linear::BaseElement;
use crate::scalar::{Field, Order, Scalar};

pub const DEFAULT_NMAX: u64 = 256;

/// Order of σ on R.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaOrder {
    Finite(u64),
    Infinite,
    /// No `n <= bound` found and infiniteness not established.
    ExceedsBound(u64),
}

impl fmt::Display for SigmaOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaOrder::Finite(n) => write!(f, "{n}"),
            SigmaOrder::Infinite => f.write_str("infinite"),
            SigmaOrder::ExceedsBound(b) => write!(f, "> {b}"),
        }
    }
}

/// Order of σ, found by iterating on generators up to `nmax`. Diagonal
/// automorphisms are decided from the orders of their eigenvalues, and
/// translations `t -> t + c` of a polynomial generator have infinite order.
pub fn sigma_order(alg: &AmbiskewAlgebra, nmax: u64) -> SigmaOrder {
    let base = alg.base();
    let sigma = alg.sigma();
    if sigma.is_diagonal() {
        let mut n = 1u64;
        for i in 0..base.ngens() {
            let ev = sigma
                .monomial_eigenvalue(&base.gen_monomial(i))
                .expect("diagonal");
            match ev.mul_order() {
                Ok(Order::Finite(k)) => n = n.lcm(&k),
                _ => return SigmaOrder::Infinite,
            }
        }
        return if n <= nmax {
            SigmaOrder::Finite(n)
        } else {
            SigmaOrder::ExceedsBound(nmax)
        };
    }
    if matches!(base.family(), Family::Polynomial) {
        let t = base.gen_elem(0);
        let shift = sigma.apply(base, &t).sub(&t);
        if shift.keys().all(|m| m.is_one()) && !shift.is_zero() {
            return SigmaOrder::Infinite;
        }
    }
    let gens: Vec<BaseElement> = (0..base.ngens()).map(|i| base.gen_elem(i)).collect();
    let mut cur = gens.clone();
    for n in 1..=nmax {
        cur = cur.iter().map(|g| sigma.apply(base, g)).collect();
        if cur == gens {
            return SigmaOrder::Finite(n);
        }
    }
    SigmaOrder::ExceedsBound(nmax)
}

/// A dimension known exactly or only up to an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimBounds {
    pub lower: Dim,
    pub upper: Dim,
}

impl DimBounds {
    fn exact(d: Dim) -> Self {
        DimBounds { lower: d, upper: d }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, d: Dim) -> bool {
        match (self.lower, self.upper, d) {
            (Dim::Finite(l), Dim::Finite(u), Dim::Finite(x)) => l <= x && x <= u,
            (l, u, x) => l == x || u == x,
        }
    }
}

impl fmt::Display for DimBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lower)
        } else {
            write!(f, "[{}, {}]", self.lower, self.upper)
        }
    }
}

/// `h = Σ h_i` with `σ(h_i) = η^i h_i`.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub eta: Scalar,
    pub components: Vec<(u64, BaseElement)>,
}

impl EigenDecomposition {
    pub fn component(&self, i: u64) -> Option<&BaseElement> {
        self.components
            .iter()
            .find(|(j, _)| *j == i)
            .map(|(_, h)| h)
    }
}

#[derive(Clone, Debug)]
pub struct PiReport {
    /// `None` when the criterion could not be applied.
    pub satisfies: Option<bool>,
    pub n: SigmaOrder,
    pub t: Order,
    pub m: Option<u64>,
    pub pi_degree: Option<u64>,
    /// `(j, h_j)` when `ξ = η^j` and `h_j != 0`.
    pub obstruction: Option<(u64, BaseElement)>,
    pub decomposition: Option<EigenDecomposition>,
    pub reason: String,
}

/// A primitive `n`-th root of unity in `field`, if there is one.
pub fn primitive_root(field: &Field, n: u64) -> Option<Scalar> {
    let one = field.one();
    let mut candidates = vec![one.clone(), -&one];
    if let Ok(z) = field.zeta() {
        let order = match z.mul_order() {
            Ok(Order::Finite(k)) => k,
            _ => return None,
        };
        for k in 1..order {
            let p = z.pow(k as i64).ok()?;
            candidates.push(-&p);
            candidates.push(p);
        }
    }
    candidates
        .into_iter()
        .find(|c| c.mul_order().ok() == Some(Order::Finite(n)))
}

/// The polynomial-identity criterion: `σ` of finite order `n`, `ξ` of
/// finite order `t`, and when `t | n` with `ξ = η^j`, `h_j = 0`. The PI
/// degree is then `2 lcm(n, t) n`.
pub fn pi_check(alg: &AmbiskewAlgebra, nmax: u64) -> Result<PiReport> {
    let base = alg.base();
    let n = sigma_order(alg, nmax);
    let t = alg.xi().mul_order()?;
    let mut report = PiReport {
        satisfies: None,
        n,
        t,
        m: None,
        pi_degree: None,
        obstruction: None,
        decomposition: None,
        reason: String::new(),
    };
    let n = match n {
        SigmaOrder::Infinite => {
            report.satisfies = Some(false);
            report.reason = "σ has infinite order".into();
            return Ok(report);
        }
        SigmaOrder::ExceedsBound(b) => {
            report.reason = format!("order of σ exceeds {b}");
            return Ok(report);
        }
        SigmaOrder::Finite(n) => n,
    };
    let t = match t {
        Order::Infinite => {
            report.satisfies = Some(false);
            report.reason = "ξ has infinite order".into();
            return Ok(report);
        }
        Order::Finite(t) => t,
    };
    if !base.descriptor().affine_commutative_domain {
        return Err(Error::Unsupported(
            "PI criterion needs a commutative affine domain as base".into(),
        ));
    }
    if !alg.sigma().is_diagonal() {
        return Err(Error::Unsupported(
            "eigendecomposition unsupported: σ is not diagonal on monomials".into(),
        ));
    }
    let eta = primitive_root(base.field(), n).ok_or_else(|| {
        Error::Unsupported(format!(
            "field {} has no primitive {n}-th root of unity",
            base.field()
        ))
    })?;
    let powers: Vec<Scalar> = (0..n).map(|i| eta.pow(i as i64).expect("power")).collect();
    let index = |s: &Scalar| powers.iter().position(|p| p == s).map(|i| i as u64);
    let mut components: Vec<(u64, BaseElement)> = Vec::new();
    for (mono, c) in alg.h() {
        let ev = alg.sigma().monomial_eigenvalue(mono).expect("diagonal");
        let i = index(&ev).ok_or_else(|| {
            Error::Invariant(format!("eigenvalue {ev} is not a power of η = {eta}"))
        })?;
        match components.iter_mut().find(|(j, _)| *j == i) {
            Some((_, h)) => h.add_term(mono.clone(), c.clone()),
            None => components.push((i, BaseElement::term(mono.clone(), c.clone()))),
        }
    }
    components.sort_by_key(|(i, _)| *i);
    let decomposition = EigenDecomposition {
        eta: eta.clone(),
        components,
    };
    if n % t == 0 {
        let j = index(alg.xi()).ok_or_else(|| {
            Error::Invariant(format!("ξ = {} is not a power of η = {eta}", alg.xi()))
        })?;
        if let Some(hj) = decomposition.component(j) {
            report.obstruction = Some((j, hj.clone()));
            report.satisfies = Some(false);
            report.reason = format!("ξ = η^{j} and h_{j} = {} is nonzero", base.fmt_element(hj));
            report.decomposition = Some(decomposition);
            return Ok(report);
        }
    }
    let m = n.lcm(&t);
    report.satisfies = Some(true);
    report.m = Some(m);
    report.pi_degree = Some(2 * m * n);
    report.reason = "per stated criterion".into();
    report.decomposition = Some(decomposition);
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub noetherian: bool,
    pub domain: bool,
    /// True when the base is prime; false means "not established".
    pub prime: bool,
    pub semiprime_goldie: bool,
    pub gk_dim: Dim,
    pub gl_dim: DimBounds,
    pub inj_dim: DimBounds,
    pub as_gorenstein: Option<bool>,
    pub as_regular: Option<bool>,
    pub auslander_gorenstein: bool,
    pub auslander_regular: bool,
    pub hopf: bool,
    pub pi: PiReport,
    pub notes: Vec<String>,
}

/// Whether σ maps every generator into a span of monomials of no larger
/// degree, so every finite set lies in a finite-dimensional σ-stable space.
fn sigma_locally_finite(alg: &AmbiskewAlgebra) -> bool {
    let base = alg.base();
    alg.sigma().is_diagonal()
        || (0..base.ngens()).all(|i| {
            let g = base.gen_monomial(i);
            [1, -1].iter().all(|&k| {
                alg.sigma()
                    .apply_power(base, &base.gen_elem(i), k)
                    .keys()
                    .all(|m| m.degree() <= g.degree())
            })
        })
}

fn bounds(base: Dim, exact: bool) -> DimBounds {
    match base {
        Dim::Finite(_) if exact => DimBounds::exact(base.plus(2)),
        Dim::Finite(_) => DimBounds {
            lower: base.plus(1),
            upper: base.plus(2),
        },
        other => DimBounds::exact(other),
    }
}

/// Properties of `alg`; `hopf` states whether the algebra has been verified
/// as an ambiskew Hopf algebra, which sharpens the dimension statements.
pub fn property_report(alg: &AmbiskewAlgebra, hopf: bool, nmax: u64) -> PropertyReport {
    let base = alg.base();
    let desc = base.descriptor();
    let mut notes = Vec::new();
    let gk_dim = if hopf || sigma_locally_finite(alg) {
        desc.gk_dim.plus(2)
    } else {
        notes.push("σ not shown locally finite; GK dimension not determined".into());
        Dim::Unknown
    };
    let gl_dim = bounds(desc.gl_dim, hopf);
    let inj_dim = bounds(desc.inj_dim, hopf && desc.as_gorenstein);
    let pi = pi_check(alg, nmax).unwrap_or_else(|e| {
        let t = alg.xi().mul_order().unwrap_or(Order::Infinite);
        PiReport {
            satisfies: None,
            n: sigma_order(alg, nmax),
            t,
            m: None,
            pi_degree: None,
            obstruction: None,
            decomposition: None,
            reason: e.to_string(),
        }
    });
    if pi.satisfies.is_some() && pi.n != SigmaOrder::Infinite && pi.t != Order::Infinite {
        notes.push(
            "PI criterion applied over the algebraic closure of the coefficient field".into(),
        );
    }
    if hopf {
        notes.push("σ is a winding automorphism, so it is locally finite".into());
    }
    PropertyReport {
        noetherian: desc.noetherian,
        domain: desc.domain,
        prime: desc.prime,
        semiprime_goldie: desc.semiprime_goldie,
        gk_dim,
        gl_dim,
        inj_dim,
        as_gorenstein: hopf.then_some(desc.as_gorenstein),
        as_regular: hopf.then_some(desc.as_regular),
        auslander_gorenstein: desc.auslander_gorenstein,
        auslander_regular: desc.auslander_regular,
        hopf,
        pi,
        notes,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl PropertyReport {
    /// `key: value` lines; `sep` is `": "` for text and `"\t"` for machine.
    pub fn render(&self, sep: &str) -> String {
        let opt = |b: Option<bool>| b.map_or("unknown", yes_no);
        let mut lines: Vec<(String, String)> = vec![
            ("noetherian".into(), yes_no(self.noetherian).into()),
            ("domain".into(), yes_no(self.domain).into()),
            (
                "prime".into(),
                if self.prime {
                    "yes (base prime)"
                } else {
                    "unknown"
                }
                .into(),
            ),
            (
                "semiprime_goldie".into(),
                yes_no(self.semiprime_goldie).into(),
            ),
            ("gk_dim".into(), self.gk_dim.to_string()),
            ("gl_dim".into(), self.gl_dim.to_string()),
            ("inj_dim".into(), self.inj_dim.to_string()),
            ("as_gorenstein".into(), opt(self.as_gorenstein).into()),
            ("as_regular".into(), opt(self.as_regular).into()),
            (
                "auslander_gorenstein".into(),
                if self.auslander_gorenstein {
                    "yes"
                } else {
                    "unknown"
                }
                .into(),
            ),
            (
                "auslander_regular".into(),
                if self.auslander_regular {
                    "yes"
                } else {
                    "unknown"
                }
                .into(),
            ),
            ("hopf".into(), yes_no(self.hopf).into()),
            ("pi".into(), opt(self.pi.satisfies).into()),
            ("pi.sigma_order".into(), self.pi.n.to_string()),
            ("pi.xi_order".into(), self.pi.t.to_string()),
        ];
        if let Some(m) = self.pi.m {
            lines.push(("pi.lcm".into(), m.to_string()));
        }
        if let Some(d) = self.pi.pi_degree {
            lines.push(("pi.degree".into(), d.to_string()));
        }
        if let Some((j, _)) = &self.pi.obstruction {
            lines.push(("pi.obstruction".into(), format!("h_{j}")));
        }
        if !self.pi.reason.is_empty() {
            lines.push(("pi.reason".into(), self.pi.reason.clone()));
        }
        for n in &self.notes {
            lines.push(("note".into(), n.clone()));
        }
        lines
            .into_iter()
            .map(|(k, v)| format!("{k}{sep}{v}\n"))
            .collect()
    }
}

/// Descriptor of a verified ambiskew Hopf algebra used as a base.
pub(crate) fn extension_descriptor(hopf: &Arc<HopfAmbiskew>) -> BaseDescriptor {
    let alg = hopf.algebra();
    let base = alg.base();
    let desc = base.descriptor();
    let props = property_report(alg, true, DEFAULT_NMAX);
    let one = base.one();
    let sigma_id = (0..base.ngens()).all(|i| {
        let g = base.gen_elem(i);
        alg.sigma().apply(base, &g) == g
    });
    let commutative = desc.commutative && sigma_id && alg.xi().is_one() && alg.h().is_zero();
    let cocommutative = desc.cocommutative && hopf.y_plus() == one && hopf.y_minus() == one;
    BaseDescriptor {
        family: "ambiskew".into(),
        gk_dim: props.gk_dim,
        gl_dim: props.gl_dim.upper,
        inj_dim: if props.inj_dim.is_exact() {
            props.inj_dim.upper
        } else {
            Dim::Unknown
        },
        noetherian: desc.noetherian,
        domain: desc.domain,
        prime: desc.prime,
        semiprime_goldie: desc.semiprime_goldie,
        commutative,
        cocommutative,
        pointed: desc.pointed,
        affine_commutative_domain: commutative && desc.affine_commutative_domain,
        as_gorenstein: desc.as_gorenstein,
        as_regular: desc.as_regular,
        auslander_gorenstein: desc.auslander_gorenstein,
        auslander_regular: desc.auslander_regular,
    }
}
