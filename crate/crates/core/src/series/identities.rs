//! Generating-function identities for the alternating generators.
//!
//! Identities with `t^-1`, `s^-1` or a `1/(s-t)` factor are checked after
//! multiplying through, so every residual is an honest truncated series.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::TruncatedSeries;
use crate::algebra::Ring;
use crate::error::{Error, Result};
use crate::polyz;
use crate::scalar::RationalFunction;
use crate::ucal::TensorElement;
use crate::uqp::{AltAlgebra, AltKind, AltTag};

type Series<A> = TruncatedSeries<A>;

/// The four generating functions in `s` and in `t`, truncated at `d`.
#[derive(Clone, Debug)]
pub struct Generating<A: Ring> {
    d: usize,
    g: [Series<A>; 2],
    gt: [Series<A>; 2],
    wm: [Series<A>; 2],
    wp: [Series<A>; 2],
}

impl<A: AltAlgebra> Generating<A> {
    pub fn new(d: usize) -> Self {
        let pair = |tag: AltTag| {
            let c = move |n: usize| A::generator(AltKind::new(tag, n as u32));
            [Series::in_s(d, d, c), Series::in_t(d, d, c)]
        };
        Generating {
            d,
            g: pair(AltTag::G),
            gt: pair(AltTag::Gtilde),
            wm: pair(AltTag::Wminus),
            wp: pair(AltTag::Wplus),
        }
    }

    pub fn truncation(&self) -> usize {
        self.d
    }

    /// A constant series.
    pub fn constant(&self, a: A) -> Series<A> {
        Series::constant(self.d, self.d, a)
    }

    pub fn scalar(&self, c: RationalFunction) -> Series<A> {
        self.constant(A::from_scalar(c))
    }

    /// `G(q^-1 t) G~(q t) - q t W-(q^-1 t) W+(q t)`.
    pub fn zvee_series(&self) -> Series<A> {
        let [_, g] = &self.g;
        let [_, gt] = &self.gt;
        let [_, wm] = &self.wm;
        let [_, wp] = &self.wp;
        let gg = &g.rescale(0, -1) * &gt.rescale(0, 1);
        let ww = (&wm.rescale(0, -1) * &wp.rescale(0, 1)).shift(0, 1).scale(&RationalFunction::q());
        &gg - &ww
    }
}

fn q() -> RationalFunction {
    RationalFunction::q()
}

fn qp(e: i64) -> RationalFunction {
    RationalFunction::q_pow(e)
}

fn s_<A: AltAlgebra>(x: &Series<A>) -> Series<A> {
    x.shift(1, 0)
}

fn t_<A: AltAlgebra>(x: &Series<A>) -> Series<A> {
    x.shift(0, 1)
}

/// The six exchange rules with a `1/(s-t)` factor. Each gives a product
/// `lhs` of two generating functions and a numerator with
/// `(s - t) lhs = numerator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionFamily {
    GWminus,
    GtWminus,
    WplusG,
    WplusGt,
    WplusWminus,
    GtG,
}

impl ReductionFamily {
    pub const ALL: [ReductionFamily; 6] = [
        ReductionFamily::GWminus,
        ReductionFamily::GtWminus,
        ReductionFamily::WplusG,
        ReductionFamily::WplusGt,
        ReductionFamily::WplusWminus,
        ReductionFamily::GtG,
    ];

    /// Generator families of the left factor (variable `s`) and right factor (`t`).
    pub fn tags(self) -> (AltTag, AltTag) {
        use AltTag::*;
        match self {
            ReductionFamily::GWminus => (G, Wminus),
            ReductionFamily::GtWminus => (Gtilde, Wminus),
            ReductionFamily::WplusG => (Wplus, G),
            ReductionFamily::WplusGt => (Wplus, Gtilde),
            ReductionFamily::WplusWminus => (Wplus, Wminus),
            ReductionFamily::GtG => (Gtilde, G),
        }
    }

    pub fn sides<A: AltAlgebra>(self, gf: &Generating<A>) -> (Series<A>, Series<A>) {
        let [gs, gt_] = &gf.g;
        let [hs, ht] = &gf.gt;
        let [ms, mt] = &gf.wm;
        let [ps, pt] = &gf.wp;
        let qm = q() - qp(-1);
        // (a s + b t) X
        let lin = |a: RationalFunction, b: RationalFunction, x: &Series<A>| &s_(x).scale(&a) + &t_(x).scale(&b);
        match self {
            ReductionFamily::GWminus => {
                let n = &lin(q(), -qp(-1), &(mt * gs)) - &s_(&(ms * gt_)).scale(&qm);
                (gs * mt, n.scale(&q()))
            }
            ReductionFamily::GtWminus => {
                let n = &lin(qp(-1), -q(), &(mt * hs)) + &s_(&(ms * ht)).scale(&qm);
                (hs * mt, n.scale(&qp(-1)))
            }
            ReductionFamily::WplusG => {
                let n = &lin(qp(-1), -q(), &(gt_ * ps)) + &t_(&(gs * pt)).scale(&qm);
                (ps * gt_, n.scale(&q()))
            }
            ReductionFamily::WplusGt => {
                let n = &lin(q(), -qp(-1), &(ht * ps)) - &t_(&(hs * pt)).scale(&qm);
                (ps * ht, n.scale(&qp(-1)))
            }
            ReductionFamily::WplusWminus => {
                let swapped = mt * ps;
                let n = &(&s_(&swapped) - &t_(&swapped))
                    + &(&(gs * ht) - &(gt_ * hs)).scale(&(RationalFunction::one() - qp(-2)));
                (ps * mt, n)
            }
            ReductionFamily::GtG => {
                let swapped = gt_ * hs;
                let ww = &(mt * ps) - &(ms * pt);
                let n = &(&s_(&swapped) - &t_(&swapped)) + &s_(&t_(&ww)).scale(&(RationalFunction::one() - qp(2)));
                (hs * gt_, n)
            }
        }
    }

    /// `(s - t) lhs - numerator`.
    pub fn residual<A: AltAlgebra>(self, gf: &Generating<A>) -> Series<A> {
        let (lhs, num) = self.sides(gf);
        &(&s_(&lhs) - &t_(&lhs)) - &num
    }
}

macro_rules! gf_identities {
    ($($variant:ident => $name:literal,)*) => {
        /// Generating-function identities among the alternating generators.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum GfIdentity { $($variant),* }

        impl GfIdentity {
            pub const ALL: &'static [GfIdentity] = &[$(GfIdentity::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(GfIdentity::$variant => $name),* }
            }
        }

        impl FromStr for GfIdentity {
            type Err = Error;
            fn from_str(s: &str) -> Result<GfIdentity> {
                match s {
                    $($name => Ok(GfIdentity::$variant),)*
                    _ => Err(Error::UnknownRelation(s.to_string())),
                }
            }
        }
    };
}

gf_identities! {
    W0Wminus => "gf_comm_w0_wminus",
    W1Wplus => "gf_comm_w1_wplus",
    W0Wplus => "gf_comm_w0_wplus",
    WminusW1 => "gf_comm_wminus_w1",
    W0G => "gf_qcomm_w0_g",
    GtW0 => "gf_qcomm_gt_w0",
    GW1 => "gf_qcomm_g_w1",
    W1Gt => "gf_qcomm_w1_gt",
    WminusWminus => "gf_comm_wminus_wminus",
    WplusWplus => "gf_comm_wplus_wplus",
    WminusWplus => "gf_sym_wminus_wplus",
    WminusG => "gf_sym_wminus_g",
    WminusGt => "gf_sym_wminus_gt",
    WplusG => "gf_sym_wplus_g",
    WplusGt => "gf_sym_wplus_gt",
    GG => "gf_comm_g_g",
    GtGt => "gf_comm_gt_gt",
    GtG => "gf_sym_gt_g",
    ExWminusG => "gf_exchange_wminus_g",
    ExGWplus => "gf_exchange_g_wplus",
    ExGtWminus => "gf_exchange_gt_wminus",
    ExWplusGt => "gf_exchange_wplus_gt",
    ExGGt => "gf_exchange_g_gt",
    ExGtG => "gf_exchange_gt_g",
    ExGGtQ => "gf_exchange_g_gt_q",
    ExGtGQ => "gf_exchange_gt_g_q",
    ReduceWminusW0 => "reduce_wminus_w0",
    ReduceWplusW0 => "reduce_wplus_w0",
    ReduceGW0 => "reduce_g_w0",
    ReduceGtW0 => "reduce_gt_w0",
    ReduceW1Wplus => "reduce_w1_wplus",
    ReduceW1Wminus => "reduce_w1_wminus",
    ReduceW1G => "reduce_w1_g",
    ReduceW1Gt => "reduce_w1_gt",
    ReduceGWminus => "reduce_g_wminus",
    ReduceGtWminus => "reduce_gt_wminus",
    ReduceWplusG => "reduce_wplus_g",
    ReduceWplusGt => "reduce_wplus_gt",
    ReduceWplusWminus => "reduce_wplus_wminus",
    ReduceGtG => "reduce_gt_g",
    ZveeSeries => "zvee_generating_function",
    ZveeW0 => "zvee_commutes_w0",
    ZveeW1 => "zvee_commutes_w1",
    ZveeG => "zvee_commutes_g",
    ZveeGt => "zvee_commutes_gt",
    ZveeWminus => "zvee_commutes_wminus",
    ZveeWplus => "zvee_commutes_wplus",
}

impl fmt::Display for GfIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl GfIdentity {
    /// Left side minus right side. `zvee(n)` supplies the central elements
    /// compared against the generating-function expression.
    pub fn residual<A: AltAlgebra>(self, gf: &Generating<A>, zvee: &dyn Fn(u32) -> A) -> Series<A> {
        use GfIdentity::*;
        let [gs, gt_] = &gf.g;
        let [hs, ht] = &gf.gt;
        let [ms, mt] = &gf.wm;
        let [ps, pt] = &gf.wp;
        let w0 = gf.constant(A::w(0));
        let w1 = gf.constant(A::w(1));
        let qm = q() - qp(-1);
        let om = RationalFunction::one() - qp(-2);
        let om_up = RationalFunction::one() - qp(2);
        let diff_t = &(ht - gt_).scale(&om);
        let diff_t_rev = &(gt_ - ht).scale(&om);
        match self {
            W0Wminus => w0.comm(mt),
            W1Wplus => w1.comm(pt),
            W0Wplus => &t_(&w0.comm(pt)) - diff_t,
            WminusW1 => &t_(&mt.comm(&w1)) - diff_t,
            W0G => &w0.qcomm(gt_) - &mt.scale(&qm),
            GtW0 => &ht.qcomm(&w0) - &mt.scale(&qm),
            GW1 => &gt_.qcomm(&w1) - &pt.scale(&qm),
            W1Gt => &w1.qcomm(ht) - &pt.scale(&qm),
            WminusWminus => ms.comm(mt),
            WplusWplus => ps.comm(pt),
            WminusWplus => &ms.comm(pt) + &ps.comm(mt),
            WminusG => &s_(&ms.comm(gt_)) + &t_(&gs.comm(mt)),
            WminusGt => &s_(&ms.comm(ht)) + &t_(&hs.comm(mt)),
            WplusG => &s_(&ps.comm(gt_)) + &t_(&gs.comm(pt)),
            WplusGt => &s_(&ps.comm(ht)) + &t_(&hs.comm(pt)),
            GG => gs.comm(gt_),
            GtGt => hs.comm(ht),
            GtG => &hs.comm(gt_) + &gs.comm(ht),
            ExWminusG => &ms.qcomm(gt_) - &mt.qcomm(gs),
            ExGWplus => &gs.qcomm(pt) - &gt_.qcomm(ps),
            ExGtWminus => &hs.qcomm(mt) - &ht.qcomm(ms),
            ExWplusGt => &ps.qcomm(ht) - &pt.qcomm(hs),
            ExGGt => {
                let lhs = &s_(&gs.comm(ht)) - &t_(&gt_.comm(hs));
                let rhs = s_(&t_(&(&mt.qcomm(ps) - &ms.qcomm(pt)))).scale(&q());
                &lhs - &rhs
            }
            ExGtG => {
                let lhs = &s_(&hs.comm(gt_)) - &t_(&ht.comm(gs));
                let rhs = s_(&t_(&(&pt.qcomm(ms) - &ps.qcomm(mt)))).scale(&q());
                &lhs - &rhs
            }
            ExGGtQ => {
                let lhs = &gs.qcomm(ht) - &gt_.qcomm(hs);
                let rhs = &t_(&mt.comm(ps)) - &s_(&ms.comm(pt));
                &lhs - &rhs.scale(&q())
            }
            ExGtGQ => {
                let lhs = &hs.qcomm(gt_) - &ht.qcomm(gs);
                let rhs = &t_(&pt.comm(ms)) - &s_(&ps.comm(mt));
                &lhs - &rhs.scale(&q())
            }
            ReduceWminusW0 => &(mt * &w0) - &(&w0 * mt),
            ReduceWplusW0 => &t_(&(&(pt * &w0) - &(&w0 * pt))) - diff_t_rev,
            ReduceGW0 => &(&(gt_ * &w0) - &(&w0 * gt_).scale(&qp(2))) - &mt.scale(&om_up),
            ReduceGtW0 => &(&(ht * &w0) - &(&w0 * ht).scale(&qp(-2))) - &mt.scale(&om),
            ReduceW1Wplus => &(&w1 * pt) - &(pt * &w1),
            ReduceW1Wminus => &t_(&(&(&w1 * mt) - &(mt * &w1))) - diff_t_rev,
            ReduceW1G => &(&(&w1 * gt_) - &(gt_ * &w1).scale(&qp(2))) - &pt.scale(&om_up),
            ReduceW1Gt => &(&(&w1 * ht) - &(ht * &w1).scale(&qp(-2))) - &pt.scale(&om),
            ReduceGWminus => ReductionFamily::GWminus.residual(gf),
            ReduceGtWminus => ReductionFamily::GtWminus.residual(gf),
            ReduceWplusG => ReductionFamily::WplusG.residual(gf),
            ReduceWplusGt => ReductionFamily::WplusGt.residual(gf),
            ReduceWplusWminus => ReductionFamily::WplusWminus.residual(gf),
            ReduceGtG => ReductionFamily::GtG.residual(gf),
            ZveeSeries => {
                let lhs = Series::in_t(gf.d, gf.d, |n| zvee(n as u32));
                &lhs - &gf.zvee_series()
            }
            ZveeW0 => w0.comm(&gf.zvee_series()),
            ZveeW1 => w1.comm(&gf.zvee_series()),
            ZveeG => gs.comm(&gf.zvee_series()),
            ZveeGt => hs.comm(&gf.zvee_series()),
            ZveeWminus => ms.comm(&gf.zvee_series()),
            ZveeWplus => ps.comm(&gf.zvee_series()),
        }
    }
}

/// Outcome of one generating-function identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GfReport {
    pub identity: String,
    pub truncation: usize,
    pub residual: String,
    pub pass: bool,
}

/// Nonzero coefficients as `s^m*t^n: value` pairs.
pub fn render_residual<A: AltAlgebra>(r: &Series<A>) -> String {
    let parts: Vec<String> = r.terms().map(|(m, n, c)| format!("s^{m}*t^{n}: {}", c.render())).collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("; ")
    }
}

/// Evaluate an identity in the tensor model, with `Z^∨_n = 1 ⊗ z^∨_n`.
pub fn verify_gf_identity(id: GfIdentity, truncation: usize) -> GfReport {
    let gf = Generating::<TensorElement>::new(truncation);
    let zvee = |n: u32| TensorElement::from_zpoly(&polyz::zvee(n));
    let r = id.residual(&gf, &zvee);
    GfReport { identity: id.name().to_string(), truncation, residual: render_residual(&r), pass: r.is_zero() }
}
