use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::linalg::{self, dot, is_nonneg, orthogonal, primitive};
use crate::arith::{ceil_i64, dot_rational, floor_i64, lcm_big, to_i64, Rational};
use crate::error::{Error, Result};

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector(pub Vec<Rational>);

impl RationalVector {
    pub fn from_ints(v: &[i64]) -> Self {
        RationalVector(v.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, t: &Rational) -> Self {
        RationalVector(self.0.iter().map(|x| x * t).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn dot(&self, n: &[i64]) -> Rational {
        dot_rational(&self.0, n)
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|x| {
                if x.denom().is_one() {
                    to_i64(x.numer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(crate::arith::fmt_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Half-space `<x, normal> >= offset` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: Rational,
    floor: i64,
    ceil: i64,
}

impl Facet {
    pub fn new(normal: Vec<i64>, offset: Rational) -> Result<Self> {
        let floor = floor_i64(&offset)?;
        let ceil = ceil_i64(&offset)?;
        Ok(Facet {
            normal,
            offset,
            floor,
            ceil,
        })
    }

    pub fn value(&self, x: &RationalVector) -> Rational {
        x.dot(&self.normal)
    }

    /// `<x, n>` for an integer point; saturating on overflow (instances are tiny).
    #[inline]
    pub fn value_int(&self, x: &[i64]) -> i64 {
        x.iter()
            .zip(&self.normal)
            .fold(0i64, |acc, (a, b)| acc.saturating_add(a.saturating_mul(*b)))
    }

    #[inline]
    pub fn strict_int(&self, x: &[i64]) -> bool {
        self.value_int(x) > self.floor
    }

    #[inline]
    pub fn holds_int(&self, x: &[i64]) -> bool {
        self.value_int(x) >= self.ceil
    }

    fn scaled(&self, t: &Rational) -> Result<Self> {
        Facet::new(self.normal.clone(), &self.offset * t)
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.normal.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "<x,({})> >= {}",
            terms.join(","),
            crate::arith::fmt_rational(&self.offset)
        )
    }
}

pub(crate) struct Hull {
    pub vertices: Vec<RationalVector>,
    pub facets: Vec<Facet>,
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Facets of `conv(points) + cone(rays)` by brute force over `dim`-subsets.
/// Requires the input to be full-dimensional.
fn facets_brute(
    dim: usize,
    points: &[Vec<BigInt>],
    rays: &[Vec<BigInt>],
) -> BTreeSet<(Vec<BigInt>, BigInt)> {
    let np = points.len();
    let total = np + rays.len();
    let mut out = BTreeSet::new();
    if dim == 0 || total < dim {
        return out;
    }
    let item = |i: usize| -> (&Vec<BigInt>, bool) {
        if i < np {
            (&points[i], true)
        } else {
            (&rays[i - np], false)
        }
    };
    let mut idx: Vec<usize> = (0..dim).collect();
    loop {
        if idx[0] < np {
            let base = &points[idx[0]];
            let dirs: Vec<Vec<BigInt>> = idx[1..]
                .iter()
                .map(|&i| {
                    let (v, is_point) = item(i);
                    if is_point {
                        v.iter().zip(base).map(|(a, b)| a - b).collect()
                    } else {
                        v.clone()
                    }
                })
                .collect();
            let n = if dim == 1 {
                vec![BigInt::one()]
            } else {
                primitive(orthogonal(&dirs, dim))
            };
            if n.iter().any(|x| !x.is_zero()) {
                for cand in [n.clone(), n.iter().map(|x| -x).collect::<Vec<_>>()] {
                    let c = dot(base, &cand);
                    let ok = points.iter().all(|p| dot(p, &cand) >= c)
                        && rays.iter().all(|r| is_nonneg(&dot(r, &cand)));
                    if ok {
                        out.insert((cand, c));
                    }
                }
            }
        }
        // next combination
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] < total - (dim - k) {
                idx[k] += 1;
                for j in k + 1..dim {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn is_vertex(dim: usize, p: &[BigInt], facets: &BTreeSet<(Vec<BigInt>, BigInt)>) -> bool {
    let tight: Vec<Vec<BigInt>> = facets
        .iter()
        .filter(|(n, c)| &dot(p, n) == c)
        .map(|(n, _)| n.clone())
        .collect();
    tight.len() >= dim && linalg::rank(&tight) == dim
}

/// Exact hull of `conv(points) + cone(rays)`, incremental over the points.
pub(crate) fn hull(dim: usize, points: &[RationalVector], rays: &[Vec<i64>]) -> Result<Hull> {
    if points.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    let uniq: BTreeSet<RationalVector> = points.iter().cloned().collect();
    let scale = uniq
        .iter()
        .flat_map(|p| p.0.iter())
        .fold(BigInt::one(), |l, x| lcm_big(&l, x.denom()));
    let mut ipts: Vec<Vec<BigInt>> = uniq
        .iter()
        .map(|p| p.0.iter().map(|x| (x * &scale).to_integer()).collect())
        .collect();
    ipts.sort_by(|a, b| {
        let sa: BigInt = a.iter().sum();
        let sb: BigInt = b.iter().sum();
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    let brays: Vec<Vec<BigInt>> = rays.iter().map(|r| to_big(r)).collect();

    // Seed with an affinely spanning subset.
    let base = ipts[0].clone();
    let mut current = vec![base.clone()];
    let mut span: Vec<Vec<BigInt>> = brays.clone();
    let mut cur_rank = linalg::rank(&span);
    for p in ipts.iter().skip(1) {
        if cur_rank == dim {
            break;
        }
        let dir: Vec<BigInt> = p.iter().zip(&base).map(|(a, b)| a - b).collect();
        span.push(dir);
        let r = linalg::rank(&span);
        if r > cur_rank {
            cur_rank = r;
            current.push(p.clone());
        } else {
            span.pop();
        }
    }
    if cur_rank < dim {
        return Err(Error::DegenerateCone);
    }
    let mut facets = facets_brute(dim, &current, &brays);
    for p in &ipts {
        if current.contains(p) {
            continue;
        }
        if facets.iter().all(|(n, c)| &dot(p, n) >= c) {
            continue;
        }
        current.retain(|v| is_vertex(dim, v, &facets));
        current.push(p.clone());
        facets = facets_brute(dim, &current, &brays);
    }
    current.retain(|v| is_vertex(dim, v, &facets));
    current.sort();

    let scale_r = Rational::from_integer(scale.clone());
    let vertices = current
        .iter()
        .map(|v| RationalVector(v.iter().map(|x| Rational::new(x.clone(), scale.clone())).collect()))
        .collect();
    let facets = facets
        .into_iter()
        .map(|(n, c)| {
            let normal = n.iter().map(to_i64).collect::<Result<Vec<i64>>>()?;
            Facet::new(normal, Rational::from_integer(c) / &scale_r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Hull { vertices, facets })
}

fn canonical_rays(dim: usize, rays: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let mut out = BTreeSet::new();
    for r in rays {
        if r.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: r.len(),
            });
        }
        let p = primitive(to_big(r));
        if p.iter().all(|x| x.is_zero()) {
            continue;
        }
        out.insert(p.iter().map(to_i64).collect::<Result<Vec<_>>>()?);
    }
    let out: Vec<Vec<i64>> = out.into_iter().collect();
    if linalg::rank_i64(&out) < dim {
        return Err(Error::DegenerateCone);
    }
    Ok(out)
}

/// `conv(vertices) + cone(rays)` with both representations kept in sync.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    vertices: Vec<RationalVector>,
    rays: Vec<Vec<i64>>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    /// Newton polyhedron of a set of integer exponents with the given
    /// (full-dimensional) recession cone.
    pub fn new(generators: &[Vec<i64>], recession: &[Vec<i64>]) -> Result<Self> {
        let pts: Vec<RationalVector> = generators.iter().map(|g| RationalVector::from_ints(g)).collect();
        Self::from_points(&pts, recession)
    }

    pub fn from_points(points: &[RationalVector], recession: &[Vec<i64>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let dim = points[0].dim();
        let rays = canonical_rays(dim, recession)?;
        let h = hull(dim, points, &rays)?;
        Ok(NewtonPolyhedron {
            dim,
            vertices: h.vertices,
            rays,
            facets: h.facets,
        })
    }

    /// The recession cone itself (Newton polyhedron of the unit ideal).
    pub fn cone(dim: usize, recession: &[Vec<i64>]) -> Result<Self> {
        Self::new(&[vec![0; dim]], recession)
    }

    /// Positive orthant in `dim` coordinates.
    pub fn orthant_rays(dim: usize) -> Vec<Vec<i64>> {
        (0..dim)
            .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found,
            });
        }
        Ok(())
    }

    pub fn scale(&self, t: &Rational) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::NonpositiveScale);
        }
        Ok(NewtonPolyhedron {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.scaled(t)).collect(),
            rays: self.rays.clone(),
            facets: self
                .facets
                .iter()
                .map(|f| f.scaled(t))
                .collect::<Result<Vec<_>>>()?,
        })
    }

    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dim)?;
        if self.rays != other.rays {
            return Err(Error::RecessionMismatch);
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for p in &self.vertices {
            for q in &other.vertices {
                sums.push(p.add(q));
            }
        }
        let h = hull(self.dim, &sums, &self.rays)?;
        Ok(NewtonPolyhedron {
            dim: self.dim,
            vertices: h.vertices,
            rays: self.rays.clone(),
            facets: h.facets,
        })
    }

    pub fn contains(&self, x: &RationalVector) -> Result<bool> {
        self.check_dim(x.dim())?;
        Ok(self.facets.iter().all(|f| f.value(x) >= f.offset))
    }

    /// Every facet inequality is strict at `x`.
    pub fn contains_interior(&self, x: &RationalVector) -> Result<bool> {
        self.check_dim(x.dim())?;
        Ok(self.facets.iter().all(|f| f.value(x) > f.offset))
    }

    /// Integer-point fast path of [`Self::contains_interior`].
    #[inline]
    pub fn contains_interior_int(&self, x: &[i64]) -> bool {
        debug_assert_eq!(x.len(), self.dim);
        self.facets.iter().all(|f| f.strict_int(x))
    }

    #[inline]
    pub fn contains_int(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| f.holds_int(x))
    }

    /// `min <p, n>` over the polyhedron.
    pub fn support_value(&self, n: &[i64]) -> Result<Rational> {
        self.check_dim(n.len())?;
        if self
            .rays
            .iter()
            .any(|r| r.iter().zip(n).map(|(a, b)| a * b).sum::<i64>() < 0)
        {
            return Err(Error::UnboundedDirection);
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| v.dot(n))
            .min()
            .expect("nonempty vertex set"))
    }

    /// Componentwise maximum over the vertices.
    pub fn max_vertex_coords(&self) -> Vec<Rational> {
        (0..self.dim)
            .map(|i| {
                self.vertices
                    .iter()
                    .map(|v| v.0[i].clone())
                    .max()
                    .expect("nonempty vertex set")
            })
            .collect()
    }

    /// Vertices recovered from the H-representation alone.
    pub fn vertices_from_facets(dim: usize, facets: &[Facet]) -> Vec<RationalVector> {
        let mut out = BTreeSet::new();
        for combo in combinations(facets.len(), dim) {
            let a: Vec<Vec<BigInt>> = combo.iter().map(|&i| to_big(&facets[i].normal)).collect();
            // Clear the denominators of the offsets row by row.
            let mut rows = Vec::with_capacity(dim);
            let mut rhs = Vec::with_capacity(dim);
            for (row, &i) in a.into_iter().zip(&combo) {
                let den = facets[i].offset.denom().clone();
                rows.push(row.into_iter().map(|x| x * &den).collect::<Vec<_>>());
                rhs.push(facets[i].offset.numer().clone());
            }
            let Some(x) = linalg::solve(&rows, &rhs) else {
                continue;
            };
            let x = RationalVector(x);
            if facets.iter().all(|f| f.value(&x) >= f.offset) {
                out.insert(x);
            }
        }
        out.into_iter().collect()
    }

    /// Extreme rays of `{x : <x, n> >= 0 for every facet normal n}`.
    pub fn rays_from_facets(dim: usize, facets: &[Facet]) -> Vec<Vec<i64>> {
        let normals: Vec<Vec<BigInt>> = facets.iter().map(|f| to_big(&f.normal)).collect();
        let mut out = BTreeSet::new();
        if dim == 1 {
            for cand in [vec![BigInt::one()], vec![-BigInt::one()]] {
                if normals.iter().all(|n| is_nonneg(&dot(n, &cand))) {
                    out.insert(cand);
                }
            }
        } else {
            for combo in combinations(normals.len(), dim - 1) {
                let rows: Vec<Vec<BigInt>> = combo.iter().map(|&i| normals[i].clone()).collect();
                if linalg::rank(&rows) < dim - 1 {
                    continue;
                }
                let r = primitive(orthogonal(&rows, dim));
                for cand in [r.clone(), r.iter().map(|x| -x).collect::<Vec<_>>()] {
                    if normals.iter().all(|n| is_nonneg(&dot(n, &cand))) {
                        out.insert(cand);
                    }
                }
            }
        }
        out.into_iter()
            .filter_map(|r| r.iter().map(|x| to_i64(x).ok()).collect())
            .collect()
    }
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - (k - i) {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
