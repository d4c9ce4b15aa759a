//! Interval polynomials, certified root counting in complex boxes, and the
//! approximate root clustering construction.
//!
//! Root counting walks the box boundary and accumulates argument variation
//! through half-plane labels: each boundary segment gets an enclosure of
//! the polynomial image; once the enclosure excludes zero it lies in one of
//! the four open half-planes, and consecutive labels can only step by a
//! quarter turn. The total is exactly `4 *` the winding number, which
//! equals the number of enclosed roots with multiplicity, simultaneously
//! for every polynomial consistent with the coefficient intervals.

use crate::budget::StepBudget;
use crate::numeric::{
    dyadic_ceil, rational_from_int, ComplexBox, Precision, Rational, RealInterval,
};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Real polynomial with interval coefficients, index `i` holding the
/// coefficient of `x^i`. The leading coefficient must exclude zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPoly {
    coeffs: Vec<RealInterval>,
}

impl IntervalPoly {
    pub fn new(coeffs: Vec<RealInterval>) -> Self {
        assert!(!coeffs.is_empty(), "empty polynomial");
        assert!(
            coeffs.len() == 1 || !coeffs.last().unwrap().contains_zero(),
            "leading coefficient straddles zero"
        );
        IntervalPoly { coeffs }
    }

    pub fn from_exact_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| RealInterval::point(rational_from_int(c)))
                .collect(),
        )
    }

    pub fn from_exact(coeffs: &[Rational]) -> Self {
        Self::new(coeffs.iter().cloned().map(RealInterval::point).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RealInterval] {
        &self.coeffs
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(RealInterval::is_point)
    }

    /// Interval Horner evaluation over a complex box.
    pub fn eval_complex(&self, z: &ComplexBox) -> ComplexBox {
        let mut acc = ComplexBox::from_real(self.coeffs.last().unwrap().clone());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(z).add(&ComplexBox::from_real(c.clone()));
        }
        acc
    }

    /// Interval Horner evaluation over a real interval.
    pub fn eval_real(&self, x: &RealInterval) -> RealInterval {
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> IntervalPoly {
        if self.coeffs.len() == 1 {
            return IntervalPoly::new(vec![RealInterval::point(Rational::zero())]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&rational_from_int(i as i64)))
            .collect();
        IntervalPoly { coeffs }
    }

    /// Divides all coefficients by the leading one.
    pub fn monic(&self) -> Result<IntervalPoly, crate::numeric::NumericError> {
        let lead = self.coeffs.last().unwrap();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.div(lead))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntervalPoly { coeffs })
    }

    /// Cauchy bound: for a monic polynomial all roots satisfy
    /// `|z| <= 1 + max |a_i|`, computed from interval upper endpoints and
    /// rounded up to a dyadic.
    pub fn root_bound(&self) -> Result<Rational, crate::numeric::NumericError> {
        let monic = self.monic()?;
        let mut max = Rational::zero();
        for c in monic.coeffs.iter().take(monic.coeffs.len() - 1) {
            let (_, hi) = c.abs_bounds();
            if hi > max {
                max = hi;
            }
        }
        Ok(dyadic_ceil(&(max + rational_from_int(1)), 4))
    }
}

/// One cluster: a rational box and its multiplicity-counted root tally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cluster {
    pub region: ComplexBox,
    pub count: u32,
}

/// An approximate root clustering. Clusters `0..real_count` intersect the
/// real axis in strictly decreasing order, then upper half-plane clusters
/// up to `upper_count`, then lower half-plane clusters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clustering {
    pub clusters: Vec<Cluster>,
    pub real_count: usize,
    pub upper_count: usize,
}

impl Clustering {
    pub fn real_clusters(&self) -> &[Cluster] {
        &self.clusters[..self.real_count]
    }

    pub fn upper_clusters(&self) -> &[Cluster] {
        &self.clusters[self.real_count..self.upper_count]
    }

    pub fn total_count(&self) -> u32 {
        self.clusters.iter().map(|c| c.count).sum()
    }

    pub fn all_simple(&self) -> bool {
        self.clusters.iter().all(|c| c.count == 1)
    }

    pub fn max_width(&self) -> Rational {
        self.clusters
            .iter()
            .map(|c| c.region.width())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

// Half-plane labels: 0 Re>0, 1 Im>0, 2 Re<0, 3 Im<0.
fn label_set(b: &ComplexBox) -> u8 {
    let mut mask = 0u8;
    if b.re.lo().is_positive() {
        mask |= 1;
    }
    if b.im.lo().is_positive() {
        mask |= 2;
    }
    if b.re.hi().is_negative() {
        mask |= 4;
    }
    if b.im.hi().is_negative() {
        mask |= 8;
    }
    mask
}

struct Segment {
    start: (Rational, Rational),
    end: (Rational, Rational),
}

impl Segment {
    fn as_box(&self) -> ComplexBox {
        let (re_lo, re_hi) = if self.start.0 <= self.end.0 {
            (self.start.0.clone(), self.end.0.clone())
        } else {
            (self.end.0.clone(), self.start.0.clone())
        };
        let (im_lo, im_hi) = if self.start.1 <= self.end.1 {
            (self.start.1.clone(), self.end.1.clone())
        } else {
            (self.end.1.clone(), self.start.1.clone())
        };
        ComplexBox::new(
            RealInterval::new(re_lo, re_hi),
            RealInterval::new(im_lo, im_hi),
        )
    }

    fn midpoint(&self) -> (Rational, Rational) {
        let two = rational_from_int(2);
        (
            (&self.start.0 + &self.end.0) / &two,
            (&self.start.1 + &self.end.1) / &two,
        )
    }
}

/// Splits the edge until every sub-segment's image excludes zero and
/// appends the label sets in walk order. `None` when a root sits on or too
/// close to the boundary for the budget.
fn refine_edge(
    poly: &IntervalPoly,
    edge: Segment,
    labels: &mut Vec<u8>,
    budget: &mut StepBudget,
) -> Option<()> {
    let mut stack = vec![(edge, 0u32)];
    while let Some((seg, depth)) = stack.pop() {
        if !budget.spend(1) {
            return None;
        }
        let image = poly.eval_complex(&seg.as_box());
        let mask = label_set(&image);
        if mask != 0 {
            labels.push(mask);
            continue;
        }
        if depth >= 64 {
            return None;
        }
        let mid = seg.midpoint();
        let second = Segment { start: mid.clone(), end: seg.end.clone() };
        let first = Segment { start: seg.start.clone(), end: mid };
        // LIFO: push the later half first so walk order is preserved.
        stack.push((second, depth + 1));
        stack.push((first, depth + 1));
    }
    Some(())
}

/// Counts roots of every polynomial consistent with `poly` inside `region`
/// (with multiplicity) by certified argument variation along the boundary.
/// A decided answer is exact and identical for all consistent polynomials.
/// `None` when a boundary enclosure cannot exclude zero within budget.
pub fn count_roots_in_box(
    poly: &IntervalPoly,
    region: &ComplexBox,
    budget: &mut StepBudget,
) -> Option<u32> {
    let (x0, x1) = (region.re.lo().clone(), region.re.hi().clone());
    let (y0, y1) = (region.im.lo().clone(), region.im.hi().clone());
    if x0 == x1 || y0 == y1 {
        // A zero-area box cannot have its boundary certified away from the
        // roots it is supposed to enclose.
        return None;
    }
    let corners = [
        (x0.clone(), y0.clone()),
        (x1.clone(), y0.clone()),
        (x1.clone(), y1.clone()),
        (x0.clone(), y1.clone()),
    ];
    let mut labels = Vec::new();
    for i in 0..4 {
        let edge = Segment {
            start: corners[i].clone(),
            end: corners[(i + 1) % 4].clone(),
        };
        refine_edge(poly, edge, &mut labels, budget)?;
    }
    debug_assert!(!labels.is_empty());

    let mut current = labels[0].trailing_zeros() as i64; // first allowed label
    let mut total = 0i64;
    for mask in labels.iter().skip(1).chain(labels.iter().take(1)) {
        let step = label_step(current, *mask)?;
        total += step;
        current = (current + step).rem_euclid(4);
    }
    if total % 4 != 0 || total < 0 {
        return None;
    }
    Some((total / 4) as u32)
}

/// Quarter-turn step from label `h` into the allowed set `mask`.
fn label_step(h: i64, mask: u8) -> Option<i64> {
    if mask & (1 << h) != 0 {
        return Some(0);
    }
    let plus = ((h + 1).rem_euclid(4)) as u8;
    let minus = ((h + 3).rem_euclid(4)) as u8;
    let has_plus = mask & (1 << plus) != 0;
    let has_minus = mask & (1 << minus) != 0;
    match (has_plus, has_minus) {
        (true, false) => Some(1),
        (false, true) => Some(-1),
        // Opposite half-planes cannot both hold, and consecutive segment
        // enclosures share a point, so exactly one neighbour is allowed.
        _ => None,
    }
}

/// Axis-aligned quadtree leaves of width `<= delta` that could not be
/// excluded by interval evaluation.
fn candidate_leaves(
    poly: &IntervalPoly,
    square: ComplexBox,
    delta: &Rational,
    budget: &mut StepBudget,
) -> Option<Vec<ComplexBox>> {
    let mut out = Vec::new();
    let mut stack = vec![square];
    while let Some(b) = stack.pop() {
        if !budget.spend(1) {
            return None;
        }
        if !poly.eval_complex(&b).contains_zero() {
            continue;
        }
        if &b.width() <= delta {
            out.push(b);
            continue;
        }
        let (re_a, re_b) = b.re.split();
        let (im_a, im_b) = b.im.split();
        stack.push(ComplexBox::new(re_a.clone(), im_a.clone()));
        stack.push(ComplexBox::new(re_b.clone(), im_a));
        stack.push(ComplexBox::new(re_a, im_b.clone()));
        stack.push(ComplexBox::new(re_b, im_b));
    }
    Some(out)
}

/// Groups leaves into connected components after inflating by `delta`, so
/// tangent leaves merge deterministically.
fn group_components(leaves: &[ComplexBox], delta: &Rational) -> Vec<Vec<usize>> {
    let inflated: Vec<ComplexBox> = leaves.iter().map(|b| b.inflate(delta)).collect();
    let mut component = vec![usize::MAX; leaves.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for start in 0..leaves.len() {
        if component[start] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut queue = vec![start];
        component[start] = id;
        let mut members = vec![start];
        while let Some(i) = queue.pop() {
            for j in 0..leaves.len() {
                if component[j] == usize::MAX && inflated[i].intersects(&inflated[j]) {
                    component[j] = id;
                    queue.push(j);
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }
    groups
}

/// Computes an approximate root clustering with boxes of width at most
/// `2^-target_width` satisfying the seven structural conditions, or `None`
/// when the budget expires (for instance because the coefficient intervals
/// are too wide to separate clusters).
pub fn compute_clustering(
    poly: &IntervalPoly,
    target_width: Precision,
    budget: &mut StepBudget,
) -> Option<Clustering> {
    let monic = poly.monic().ok()?;
    let degree = monic.degree();
    if degree == 0 {
        return Some(Clustering { clusters: vec![], real_count: 0, upper_count: 0 });
    }
    let bound = monic.root_bound().ok()?;
    let square = ComplexBox::new(
        RealInterval::new(-bound.clone(), bound.clone()),
        RealInterval::new(-bound.clone(), bound),
    );
    let target = target_width.width_bound();
    // Group hulls get inflated by delta/2 and leaves already measure delta,
    // so start well below the requested width.
    let mut delta = &target / rational_from_int(8);
    loop {
        if budget.is_exhausted() {
            return None;
        }
        if let Some(clustering) =
            try_clustering(&monic, square.clone(), &delta, &target, degree, budget)
        {
            return Some(clustering);
        }
        if budget.is_exhausted() {
            return None;
        }
        delta /= rational_from_int(2);
    }
}

fn try_clustering(
    monic: &IntervalPoly,
    square: ComplexBox,
    delta: &Rational,
    target: &Rational,
    degree: usize,
    budget: &mut StepBudget,
) -> Option<Clustering> {
    let leaves = candidate_leaves(monic, square, delta, budget)?;
    if leaves.is_empty() {
        return None;
    }
    let groups = group_components(&leaves, delta);
    let half_delta = delta / rational_from_int(2);
    let mut boxes: Vec<ComplexBox> = Vec::new();
    for group in &groups {
        let mut hull = leaves[group[0]].clone();
        for &i in &group[1..] {
            hull = hull.hull(&leaves[i]);
        }
        boxes.push(hull.inflate(&half_delta));
    }
    // Cluster boxes must be pairwise disjoint so counts are unambiguous.
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            if boxes[i].intersects(&boxes[j]) {
                return None;
            }
        }
    }
    if boxes.iter().any(|b| &b.width() > target) {
        return None;
    }
    let mut clusters = Vec::new();
    let mut total = 0u32;
    for b in boxes {
        let count = count_roots_in_box(monic, &b, budget)?;
        total += count;
        if count > 0 {
            clusters.push(Cluster { region: b, count });
        }
    }
    if total as usize != degree {
        return None;
    }
    arrange_clusters(clusters)
}

/// Sorts clusters per the structural conditions and checks the reflection
/// conditions; `None` if the geometry does not yet separate.
fn arrange_clusters(clusters: Vec<Cluster>) -> Option<Clustering> {
    let mut real: Vec<Cluster> = Vec::new();
    let mut upper: Vec<Cluster> = Vec::new();
    let mut lower: Vec<Cluster> = Vec::new();
    for c in clusters {
        if c.region.intersects_real_axis() {
            real.push(c);
        } else if c.region.in_upper_half_plane() {
            upper.push(c);
        } else {
            lower.push(c);
        }
    }
    // (6): strictly decreasing along the real axis.
    real.sort_by(|a, b| b.region.re.lo().cmp(a.region.re.lo()));
    for w in real.windows(2) {
        if w[0].region.re.lo() <= w[1].region.re.hi() {
            return None;
        }
    }
    let key = |c: &Cluster| (c.region.re.midpoint(), c.region.im.midpoint());
    upper.sort_by(|a, b| {
        let (ar, ai) = key(a);
        let (br, bi) = key(b);
        br.cmp(&ar).then(ai.cmp(&bi))
    });
    lower.sort_by(|a, b| {
        let (ar, ai) = key(a);
        let (br, bi) = key(b);
        br.cmp(&ar).then(bi.cmp(&ai))
    });

    let all: Vec<&Cluster> = real.iter().chain(upper.iter()).chain(lower.iter()).collect();
    // (3): a real cluster's reflection avoids every other cluster.
    // (4): a complex cluster's reflection meets exactly one other cluster,
    //      with an equal count.
    for (j, c) in all.iter().enumerate() {
        let refl = c.region.reflect();
        let partners: Vec<usize> = all
            .iter()
            .enumerate()
            .filter(|(k, other)| *k != j && refl.intersects(&other.region))
            .map(|(k, _)| k)
            .collect();
        if c.region.intersects_real_axis() {
            if !partners.is_empty() {
                return None;
            }
        } else if partners.len() != 1 || all[partners[0]].count != c.count {
            return None;
        }
    }
    let real_count = real.len();
    let upper_count = real_count + upper.len();
    let clusters = real.into_iter().chain(upper).chain(lower).collect();
    Some(Clustering { clusters, real_count, upper_count })
}

/// Independent re-validation of the seven clustering conditions, used by
/// property tests and the certificate checker. Coverage (condition 1) is
/// certified by matching the sum of per-cluster recounts against the
/// degree: all roots lie in the Cauchy square and the boxes are disjoint.
pub fn validate_clustering(
    poly: &IntervalPoly,
    clustering: &Clustering,
    budget: &mut StepBudget,
) -> Result<(), String> {
    let monic = poly
        .monic()
        .map_err(|_| "leading coefficient straddles zero".to_string())?;
    let n = clustering.clusters.len();
    if clustering.real_count > n
        || clustering.upper_count < clustering.real_count
        || clustering.upper_count > n
    {
        return Err("section indices out of range".into());
    }
    for i in 0..n {
        for j in i + 1..n {
            if clustering.clusters[i]
                .region
                .intersects(&clustering.clusters[j].region)
            {
                return Err(format!("clusters {i} and {j} overlap"));
            }
        }
    }
    // (5) and (7): section structure.
    for (j, c) in clustering.clusters.iter().enumerate() {
        let in_real = j < clustering.real_count;
        let in_upper = j >= clustering.real_count && j < clustering.upper_count;
        if in_real != c.region.intersects_real_axis() {
            return Err(format!("cluster {j} breaks condition (5)"));
        }
        if !in_real && in_upper != c.region.in_upper_half_plane() {
            return Err(format!("cluster {j} breaks condition (7)"));
        }
        if !in_real && !in_upper && !c.region.in_lower_half_plane() {
            return Err(format!("cluster {j} breaks condition (7)"));
        }
    }
    // (6): real sections strictly ordered.
    for j in 1..clustering.real_count {
        let prev = &clustering.clusters[j - 1].region;
        let cur = &clustering.clusters[j].region;
        if prev.re.lo() <= cur.re.hi() {
            return Err(format!("clusters {} and {} break condition (6)", j - 1, j));
        }
    }
    // (3) and (4): reflection conditions.
    for (j, c) in clustering.clusters.iter().enumerate() {
        let refl = c.region.reflect();
        let partners: Vec<usize> = clustering
            .clusters
            .iter()
            .enumerate()
            .filter(|(k, other)| *k != j && refl.intersects(&other.region))
            .map(|(k, _)| k)
            .collect();
        if c.region.intersects_real_axis() {
            if !partners.is_empty() {
                return Err(format!("cluster {j} breaks condition (3)"));
            }
        } else {
            if partners.len() != 1 {
                return Err(format!("cluster {j} breaks condition (4)"));
            }
            if clustering.clusters[partners[0]].count != c.count {
                return Err(format!("cluster {j} conjugate count mismatch"));
            }
        }
    }
    // (2): recount every box; (1) via the degree sum.
    let mut total = 0u32;
    for (j, c) in clustering.clusters.iter().enumerate() {
        if c.count == 0 {
            return Err(format!("cluster {j} has zero count"));
        }
        match count_roots_in_box(&monic, &c.region, budget) {
            Some(count) if count == c.count => total += count,
            Some(count) => {
                return Err(format!(
                    "cluster {j} claims {} roots, recount found {count}",
                    c.count
                ))
            }
            None => return Err(format!("cluster {j} recount exhausted its budget")),
        }
    }
    if total as usize != monic.degree() {
        return Err(format!("counts sum to {total}, degree is {}", monic.degree()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::parse_rational;

    fn budget() -> StepBudget {
        StepBudget::new(2_000_000)
    }

    fn boxed(relo: &str, rehi: &str, imlo: &str, imhi: &str) -> ComplexBox {
        ComplexBox::new(
            RealInterval::new(parse_rational(relo).unwrap(), parse_rational(rehi).unwrap()),
            RealInterval::new(parse_rational(imlo).unwrap(), parse_rational(imhi).unwrap()),
        )
    }

    #[test]
    fn eval_exact_points() {
        // x^2 - 1 at 2 -> 3
        let p = IntervalPoly::from_exact_ints(&[-1, 0, 1]);
        let v = p.eval_complex(&boxed("2", "2", "0", "0"));
        assert_eq!(v, boxed("3", "3", "0", "0"));
        // x^2 + 1 at i -> 0
        let q = IntervalPoly::from_exact_ints(&[1, 0, 1]);
        let v = q.eval_complex(&boxed("0", "0", "1", "1"));
        assert_eq!(v, boxed("0", "0", "0", "0"));
    }

    #[test]
    fn eval_widened_contains_exact() {
        let exact = IntervalPoly::from_exact_ints(&[-1, 0, 1]);
        let eps = parse_rational("1/64").unwrap();
        let widened = IntervalPoly::new(
            exact
                .coeffs()
                .iter()
                .map(|c| c.add(&RealInterval::new(-eps.clone(), eps.clone())))
                .collect(),
        );
        let z = boxed("1/2", "3/4", "-1/4", "1/4");
        let ve = exact.eval_complex(&z);
        let vw = widened.eval_complex(&z);
        assert!(vw.contains_box(&ve));
    }

    #[test]
    fn count_single_root_of_x2_plus_1() {
        let p = IntervalPoly::from_exact_ints(&[1, 0, 1]);
        let b = boxed("-1/2", "1/2", "1/2", "3/2");
        assert_eq!(count_roots_in_box(&p, &b, &mut budget()), Some(1));
    }

    #[test]
    fn count_triple_root() {
        // (x-1)^3 = x^3 - 3x^2 + 3x - 1; box around 1 contains 3 roots.
        let p = IntervalPoly::from_exact_ints(&[-1, 3, -3, 1]);
        let b = boxed("3/4", "5/4", "-1/4", "1/4");
        assert_eq!(count_roots_in_box(&p, &b, &mut budget()), Some(3));
    }

    #[test]
    fn count_excludes_sqrt_two() {
        // x^2 - 2: sqrt(2) > 1, so [0,1] x [-1,1] holds no roots.
        let p = IntervalPoly::from_exact_ints(&[-2, 0, 1]);
        let b = boxed("0", "1", "-1", "1");
        assert_eq!(count_roots_in_box(&p, &b, &mut budget()), Some(0));
    }

    #[test]
    fn count_on_boundary_is_unknown() {
        // Root exactly on the boundary: every refinement still contains 0.
        let p = IntervalPoly::from_exact_ints(&[-1, 1]); // x - 1
        let b = boxed("1", "2", "-1", "1");
        assert_eq!(count_roots_in_box(&p, &b, &mut budget()), None);
    }

    #[test]
    fn count_additive_under_partition() {
        let p = IntervalPoly::from_exact_ints(&[-2, 0, 1]); // roots +-sqrt(2)
        let whole = boxed("-2", "2", "-1", "1");
        let left = boxed("-2", "0", "-1", "1");
        let right = boxed("0", "2", "-1", "1");
        let w = count_roots_in_box(&p, &whole, &mut budget()).unwrap();
        let l = count_roots_in_box(&p, &left, &mut budget()).unwrap();
        let r = count_roots_in_box(&p, &right, &mut budget()).unwrap();
        assert_eq!(w, l + r);
        assert_eq!(w, 2);
    }

    #[test]
    fn clustering_triple_root() {
        let p = IntervalPoly::from_exact_ints(&[-1, 3, -3, 1]);
        let c = compute_clustering(&p, Precision(4), &mut budget()).unwrap();
        assert_eq!(c.clusters.len(), 1);
        assert_eq!(c.real_count, 1);
        assert_eq!(c.clusters[0].count, 3);
        assert!(c.clusters[0].region.contains_point(
            &parse_rational("1").unwrap(),
            &parse_rational("0").unwrap()
        ));
        assert!(c.max_width() <= Precision(4).width_bound());
        validate_clustering(&p, &c, &mut budget()).unwrap();
    }

    #[test]
    fn clustering_two_real_roots_ordered() {
        let p = IntervalPoly::from_exact_ints(&[-4, 0, 1]); // x^2 - 4
        let c = compute_clustering(&p, Precision(4), &mut budget()).unwrap();
        assert_eq!(c.clusters.len(), 2);
        assert_eq!(c.real_count, 2);
        assert!(c.clusters[0].region.contains_point(
            &parse_rational("2").unwrap(),
            &parse_rational("0").unwrap()
        ));
        assert!(c.clusters[1].region.contains_point(
            &parse_rational("-2").unwrap(),
            &parse_rational("0").unwrap()
        ));
        validate_clustering(&p, &c, &mut budget()).unwrap();
    }

    #[test]
    fn clustering_conjugate_pair() {
        let p = IntervalPoly::from_exact_ints(&[1, 0, 1]); // x^2 + 1
        let c = compute_clustering(&p, Precision(4), &mut budget()).unwrap();
        assert_eq!(c.clusters.len(), 2);
        assert_eq!(c.real_count, 0);
        assert_eq!(c.upper_count, 1);
        assert!(c.clusters[0].region.in_upper_half_plane());
        assert!(c.clusters[1].region.in_lower_half_plane());
        validate_clustering(&p, &c, &mut budget()).unwrap();
    }

    #[test]
    fn validator_rejects_tampering() {
        let p = IntervalPoly::from_exact_ints(&[-4, 0, 1]);
        let c = compute_clustering(&p, Precision(4), &mut budget()).unwrap();
        let mut bad = c.clone();
        bad.clusters[0].count = 2;
        assert!(validate_clustering(&p, &bad, &mut budget()).is_err());
        let mut swapped = c;
        swapped.clusters.swap(0, 1);
        assert!(validate_clustering(&p, &swapped, &mut budget()).is_err());
    }
}
