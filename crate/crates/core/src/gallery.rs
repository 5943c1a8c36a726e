//! Named example structures: cyclic and Klein groups, min-semigroups,
//! Ω-grouplikes, the Klein grouplike and the rational b-grouplikes.

use std::fmt;
use std::str::FromStr;

use crate::error::{AlgebraError, Result};
use crate::function::{f_multiplication, EndoFunction};
use crate::joined::JoinedStructure;
use crate::magma::{Group, Magma, Semigroup};
use crate::rational::{
    parse_rational, truncated_product_magma, Rational, RationalJoined, RationalRuleMagma, Sampling,
};

/// Klein four-group labels; the product is XOR of the two-bit codes, so
/// `a η = α`, `a α = η` and `η α = a`.
pub const KLEIN_LABELS: [&str; 4] = ["e", "a", "η", "α"];

fn positive(n: usize) -> Result<usize> {
    if n == 0 {
        Err(AlgebraError::InvalidParameter(
            "n must be at least 1".into(),
        ))
    } else {
        Ok(n)
    }
}

/// `(Z_n, +_n)` with labels `0..n`.
pub fn cyclic(n: usize) -> Result<Group> {
    let n = positive(n)?;
    Group::from_magma(Magma::from_fn(Magma::default_names(n), |x, y| (x + y) % n)?)
}

pub fn klein_group() -> Group {
    let names = KLEIN_LABELS.iter().map(|s| s.to_string()).collect();
    Group::from_magma(Magma::from_fn(names, |x, y| x ^ y).expect("4x4 table"))
        .expect("Klein four-group")
}

/// The symmetric group on three letters, elements listed as permutations in
/// lexicographic order, composed as `(p q)(i) = p(q(i))`.
pub fn symmetric3() -> Group {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let names = perms
        .iter()
        .map(|p| format!("{}{}{}", p[0], p[1], p[2]))
        .collect();
    let m = Magma::from_fn(names, |x, y| {
        let comp = [
            perms[x][perms[y][0]],
            perms[x][perms[y][1]],
            perms[x][perms[y][2]],
        ];
        perms.iter().position(|p| *p == comp).expect("closed")
    })
    .expect("6x6 table");
    Group::from_magma(m).expect("S3")
}

/// `f(e) = f(η) = e`, `f(a) = f(α) = a` on the Klein group.
pub fn klein_function() -> EndoFunction {
    EndoFunction::new(vec![0, 1, 0, 1]).expect("valid map")
}

/// `x (.) y = f(x y)` for the Klein `f`.
pub fn klein_grouplike() -> Semigroup {
    Semigroup::new(f_multiplication(&klein_group(), &klein_function()))
        .expect("Klein grouplike is associative")
}

pub fn klein_joined() -> JoinedStructure {
    JoinedStructure::new(
        klein_group().into_magma(),
        klein_grouplike().into_magma(),
        0,
    )
    .expect("Klein joined structure")
}

/// `({0, .., n - 1}, min)`.
pub fn min_semigroup(n: usize) -> Result<Semigroup> {
    let n = positive(n)?;
    Semigroup::new(Magma::from_fn(Magma::default_names(n), |x, y| x.min(y))?)
}

/// `0` absorbing, otherwise `x y = x`.
pub fn omega_grouplike(n: usize) -> Result<Semigroup> {
    let n = positive(n)?;
    Semigroup::new(Magma::from_fn(Magma::default_names(n), |x, y| {
        if x == 0 || y == 0 {
            0
        } else {
            x
        }
    })?)
}

/// `(Z_n, +_n, 0, min)`.
pub fn zn_min_joined(n: usize) -> Result<JoinedStructure> {
    let g = cyclic(n)?;
    let min = Magma::from_fn(Magma::default_names(n), |x, y| x.min(y))?;
    JoinedStructure::new(g.into_magma(), min, 0)
}

pub fn b_addition(b: Rational, sampling: Sampling) -> Result<RationalRuleMagma> {
    RationalRuleMagma::b_addition(b, sampling)
}

pub fn b_joined(b: Rational, sampling: Sampling) -> Result<RationalJoined> {
    RationalJoined::b_joined(b, sampling)
}

/// Finite truncation of `([0, 1), *)` on the given values plus `0`.
pub fn fractional_mult_sample(values: &[Rational]) -> Result<Magma> {
    truncated_product_magma(values)
}

/// Groups used by enumeration sweeps, up to the given order.
pub fn group_catalog(max_order: usize) -> Vec<(String, Group)> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push((format!("Z{n}"), cyclic(n).expect("n >= 1")));
        if n == 4 {
            out.push(("Klein".to_string(), klein_group()));
        }
        if n == 6 {
            out.push(("S3".to_string(), symmetric3()));
        }
    }
    out
}

/// Builder identifiers accepted by [`build`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builder {
    Cyclic(usize),
    KleinGroup,
    KleinGrouplike,
    KleinJoined,
    MinSemigroup(usize),
    OmegaGrouplike(usize),
    ZnMinJoined(usize),
    BAddition(Rational),
    BJoined(Rational),
    FractionalMultSample(Vec<Rational>),
}

impl FromStr for Builder {
    type Err = AlgebraError;

    /// Parses `name` or `name(args)`, e.g. `cyclic(4)` or `b_addition(3/2)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], Some(&s[i + 1..s.len() - 1])),
            Some(_) => return Err(AlgebraError::InvalidParameter(format!("malformed `{s}`"))),
            None => (s, None),
        };
        let bad = || AlgebraError::InvalidParameter(format!("bad arguments in `{s}`"));
        let int = || -> Result<usize> { args.ok_or_else(bad)?.trim().parse().map_err(|_| bad()) };
        let rational = || parse_rational(args.ok_or_else(bad)?);
        let b = match name.trim() {
            "cyclic" => Builder::Cyclic(positive(int()?)?),
            "klein_group" => Builder::KleinGroup,
            "klein_grouplike" => Builder::KleinGrouplike,
            "klein_joined" => Builder::KleinJoined,
            "min_semigroup" => Builder::MinSemigroup(positive(int()?)?),
            "omega_grouplike" => Builder::OmegaGrouplike(positive(int()?)?),
            "zn_min_joined" => Builder::ZnMinJoined(positive(int()?)?),
            "b_addition" => Builder::BAddition(nonzero(rational()?)?),
            "b_joined" => Builder::BJoined(nonzero(rational()?)?),
            "fractional_mult_sample" => Builder::FractionalMultSample(
                args.ok_or_else(bad)?
                    .split(',')
                    .map(parse_rational)
                    .collect::<Result<_>>()?,
            ),
            other => {
                return Err(AlgebraError::InvalidParameter(format!(
                    "unknown gallery builder `{other}`"
                )))
            }
        };
        Ok(b)
    }
}

fn nonzero(b: Rational) -> Result<Rational> {
    if num_traits::Zero::is_zero(&b) {
        Err(AlgebraError::InvalidParameter("b must be nonzero".into()))
    } else {
        Ok(b)
    }
}

impl fmt::Display for Builder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builder::Cyclic(n) => write!(f, "cyclic({n})"),
            Builder::KleinGroup => write!(f, "klein_group"),
            Builder::KleinGrouplike => write!(f, "klein_grouplike"),
            Builder::KleinJoined => write!(f, "klein_joined"),
            Builder::MinSemigroup(n) => write!(f, "min_semigroup({n})"),
            Builder::OmegaGrouplike(n) => write!(f, "omega_grouplike({n})"),
            Builder::ZnMinJoined(n) => write!(f, "zn_min_joined({n})"),
            Builder::BAddition(b) => write!(f, "b_addition({b})"),
            Builder::BJoined(b) => write!(f, "b_joined({b})"),
            Builder::FractionalMultSample(v) => {
                let parts: Vec<String> = v.iter().map(|r| r.to_string()).collect();
                write!(f, "fractional_mult_sample({})", parts.join(","))
            }
        }
    }
}

/// Output of a gallery builder.
#[derive(Clone, Debug)]
pub enum GalleryItem {
    Magma(Magma),
    Semigroup(Semigroup),
    Group(Group),
    Joined(JoinedStructure),
    Rational(RationalRuleMagma),
    RationalJoined(RationalJoined),
}

pub fn build(builder: &Builder, sampling: Sampling) -> Result<GalleryItem> {
    Ok(match builder {
        Builder::Cyclic(n) => GalleryItem::Group(cyclic(*n)?),
        Builder::KleinGroup => GalleryItem::Group(klein_group()),
        Builder::KleinGrouplike => GalleryItem::Semigroup(klein_grouplike()),
        Builder::KleinJoined => GalleryItem::Joined(klein_joined()),
        Builder::MinSemigroup(n) => GalleryItem::Semigroup(min_semigroup(*n)?),
        Builder::OmegaGrouplike(n) => GalleryItem::Semigroup(omega_grouplike(*n)?),
        Builder::ZnMinJoined(n) => GalleryItem::Joined(zn_min_joined(*n)?),
        Builder::BAddition(b) => GalleryItem::Rational(b_addition(b.clone(), sampling)?),
        Builder::BJoined(b) => GalleryItem::RationalJoined(b_joined(b.clone(), sampling)?),
        Builder::FractionalMultSample(v) => GalleryItem::Magma(fractional_mult_sample(v)?),
    })
}

/// Gallery entry by name, e.g. `gallery("omega_grouplike(4)")`.
pub fn gallery(name: &str) -> Result<GalleryItem> {
    build(&name.parse()?, Sampling::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn klein_grouplike_table() {
        let k = klein_grouplike();
        let idx = |l: &str| k.index_of(l).unwrap();
        let (e, a, eta, alpha) = (idx("e"), idx("a"), idx("η"), idx("α"));
        assert_eq!(k.op(a, a), e);
        assert_eq!(k.op(a, eta), a);
        assert_eq!(k.op(eta, alpha), a);
        assert_eq!(k.op(alpha, alpha), e);
        #[rustfmt::skip]
        let expected = vec![
            e, a, e, a,
            a, e, a, e,
            e, a, e, a,
            a, e, a, e,
        ];
        assert_eq!(k.table(), expected.as_slice());
    }

    #[test]
    fn klein_group_relations() {
        let k = klein_group();
        assert_eq!(k.op(1, 2), 3);
        assert_eq!(k.op(1, 3), 2);
        assert_eq!(k.op(2, 3), 1);
        assert!(k.elements().all(|x| k.op(x, x) == 0));
    }

    #[test]
    fn s3_is_nonabelian() {
        let s = symmetric3();
        assert_eq!(s.identity(), 0);
        assert!(!s.is_commutative());
    }

    #[test]
    fn invalid_params() {
        assert!(cyclic(0).is_err());
        assert!(min_semigroup(0).is_err());
        assert!(b_addition(rat(0, 1), Sampling::default()).is_err());
        assert!("cyclic(0)".parse::<Builder>().is_err());
        assert!("b_joined(0)".parse::<Builder>().is_err());
        assert!("nope".parse::<Builder>().is_err());
        assert!("cyclic(x)".parse::<Builder>().is_err());
    }

    #[test]
    fn builder_ids_round_trip() {
        for s in [
            "cyclic(4)",
            "klein_group",
            "klein_grouplike",
            "klein_joined",
            "min_semigroup(5)",
            "omega_grouplike(3)",
            "zn_min_joined(5)",
            "b_addition(3/2)",
            "b_joined(-1)",
            "fractional_mult_sample(1/2,1/3,1/4)",
        ] {
            let b: Builder = s.parse().unwrap();
            assert_eq!(b.to_string(), s);
            build(&b, Sampling::default()).unwrap();
        }
    }

    #[test]
    fn fractional_sample_is_closed_truncation() {
        let m = fractional_mult_sample(&[rat(1, 2), rat(1, 3), rat(1, 4)]).unwrap();
        assert_eq!(m.names(), &["0", "1/4", "1/3", "1/2"]);
        assert!(m.is_associative());
        assert!(!m.is_surjective());
        assert!(fractional_mult_sample(&[rat(1, 1)]).is_err());
    }

    #[test]
    fn catalog_orders() {
        let names: Vec<String> = group_catalog(4).into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, ["Z1", "Z2", "Z3", "Z4", "Klein"]);
    }
}
