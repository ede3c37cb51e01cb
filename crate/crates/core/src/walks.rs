//! Maximal circuit steps, layered reachability, circuit distance and
//! diameter, and walk certificates.
//!
//! A circuit walk moves from `y` to `y + a g` where `g` is a signed circuit
//! and `a > 0` is the largest step keeping the point feasible. Blocked
//! (`a = 0`) and unbounded steps never appear in a walk, so breadth-first
//! expansion over all signed circuits with exact deduplication enumerates
//! walk endpoints layer by layer, and circuit distances found this way are
//! exact within the depth budget.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::certificate::{WalkCertificate, WalkStep};
use crate::circuits::{enumerate_circuits, is_circuit, CircuitSet};
use crate::error::{Error, Result};
use crate::geometry::{enumerate_vertices, Vertex};
use crate::linalg::rank;
use crate::model::{from_big_point, FacetSet, Polyhedron};
use crate::scalar::Scalar;

/// Frontier points are expanded in chunks of this size so that the
/// unmerged successor lists stay bounded in memory.
const EXPANSION_CHUNK: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome<S> {
    Bounded {
        length: S,
        endpoint: Vec<S>,
        /// Decreasing rows that become tight at the endpoint.
        blocking_rows: FacetSet,
    },
    /// A tight row decreases immediately: the maximal step is zero.
    Blocked,
    /// No row decreases along the direction.
    Unbounded,
}

impl<S> StepOutcome<S> {
    pub fn is_bounded(&self) -> bool {
        matches!(self, Self::Bounded { .. })
    }
}

/// Ratio test on slacks `s` and direction image `A2 g`.
fn ratio_test<S: Scalar>(slack: &[S], image: &[S]) -> Option<S> {
    let mut best: Option<S> = None;
    for (s, a) in slack.iter().zip(image) {
        if a.is_negative() {
            let r = s.clone() / -a.clone();
            if best.as_ref().is_none_or(|b| r < *b) {
                best = Some(r);
            }
        }
    }
    best
}

fn add_scaled<S: Scalar>(x: &[S], alpha: &S, g: &[S]) -> Vec<S> {
    x.iter()
        .zip(g)
        .map(|(a, b)| a.clone() + alpha.clone() * b.clone())
        .collect()
}

fn outcome_of<S: Scalar>(slack: &[S], image: &[S], x: &[S], g: &[S]) -> StepOutcome<S> {
    match ratio_test(slack, image) {
        None => StepOutcome::Unbounded,
        Some(alpha) if alpha.is_zero() => StepOutcome::Blocked,
        Some(alpha) => {
            let blocking_rows = FacetSet::from_zero_based((0..slack.len()).filter(|&i| {
                image[i].is_negative()
                    && (slack[i].clone() + alpha.clone() * image[i].clone()).is_zero()
            }));
            StepOutcome::Bounded {
                endpoint: add_scaled(x, &alpha, g),
                length: alpha,
                blocking_rows,
            }
        }
    }
}

/// The maximal step from a feasible `x` along the circuit `g`.
pub fn max_step<S: Scalar>(p: &Polyhedron<S>, x: &[S], g: &[S]) -> Result<StepOutcome<S>> {
    if !p.contains(x)? {
        return Err(Error::Infeasible);
    }
    if g.iter().all(Zero::is_zero) || !is_circuit(p, g)? {
        return Err(Error::NotACircuit);
    }
    let slack = p.residuals(x)?;
    let image = p.ineq_matrix().mul_vec(g)?;
    Ok(outcome_of(&slack, &image, x, g))
}

fn zero_mask(values: impl Iterator<Item = bool>, len: usize) -> FixedBitSet {
    let mut mask = FixedBitSet::with_capacity(len);
    for (i, z) in values.enumerate() {
        if z {
            mask.insert(i);
        }
    }
    mask
}

// The search itself runs on integers: every inequality row is scaled to
// integer coefficients and every point is stored as `num / den` with
// `gcd(num, den) = 1`, so a step costs one gcd instead of one per entry.

/// A point `num / den` in lowest terms with `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct HPoint {
    num: Vec<BigInt>,
    den: BigInt,
}

impl HPoint {
    fn from_scalars<S: Scalar>(x: &[S]) -> Self {
        let ratios: Vec<BigRational> = x.iter().map(Scalar::to_ratio).collect();
        let den = ratios.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let num = ratios
            .iter()
            .map(|q| q.numer() * (&den / q.denom()))
            .collect();
        Self { num, den }
    }

    fn to_big(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    fn to_scalars<S: Scalar>(&self) -> Vec<S> {
        self.num
            .iter()
            .map(|n| S::from_ratio(n, &self.den).expect("walk points fit the scalar type"))
            .collect()
    }
}

/// An unreduced positive step length `numer / denom`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Length {
    numer: BigInt,
    denom: BigInt,
}

impl Length {
    fn to_ratio(&self) -> BigRational {
        BigRational::new(self.numer.clone(), self.denom.clone())
    }
}

struct SignedStep {
    direction: Vec<BigInt>,
    /// `A2 g` with the integer-scaled rows.
    image: Vec<BigInt>,
    decreasing: FixedBitSet,
}

/// Slack numerators `A2 num - b2 den` of a point and its tight rows.
/// `approx` holds the slacks as floats and is only used to skip exact
/// comparisons that are certain to fail.
#[derive(Clone)]
struct PointState {
    slack: Vec<BigInt>,
    tight: FixedBitSet,
    approx: Vec<f64>,
}

fn approx_slack(slack: &[BigInt], den: &BigInt) -> Vec<f64> {
    let d = den.to_f64().unwrap_or(f64::NAN);
    slack
        .iter()
        .map(|s| s.to_f64().unwrap_or(f64::NAN) / d)
        .collect()
}

fn certainly_different(a: f64, b: f64) -> bool {
    a.is_finite() && b.is_finite() && (a - b).abs() > 1e-9 * a.abs().max(b.abs()).max(1.0)
}

/// How a point was first reached: from `parent` in the previous layer along
/// signed circuit `direction` with step `length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepLink<S> {
    pub parent: usize,
    pub direction: usize,
    pub length: S,
}

#[derive(Clone, Debug)]
struct Link {
    parent: usize,
    direction: usize,
    length: Length,
}

#[derive(Clone, Debug, Default)]
struct Layer {
    points: Vec<HPoint>,
    links: Vec<Option<Link>>,
}

/// The layers of a search with back links to their parents.
#[derive(Clone, Debug)]
struct Trail {
    layers: Vec<Layer>,
    directions: Vec<Vec<BigInt>>,
}

impl Trail {
    fn locate(&self, point: &HPoint) -> Option<(usize, usize)> {
        self.layers
            .iter()
            .enumerate()
            .find_map(|(d, layer)| layer.points.iter().position(|q| q == point).map(|i| (d, i)))
    }

    fn step(&self, link: &Link) -> WalkStep {
        WalkStep {
            direction: self.directions[link.direction].clone(),
            length: link.length.to_ratio(),
        }
    }

    fn steps_to(&self, depth: usize, index: usize) -> Vec<WalkStep> {
        let mut steps = Vec::with_capacity(depth);
        let (mut d, mut i) = (depth, index);
        while let Some(link) = &self.layers[d].links[i] {
            steps.push(self.step(link));
            i = link.parent;
            d -= 1;
        }
        steps.reverse();
        steps
    }

    fn certificate(&self, steps: Vec<WalkStep>, end: &HPoint, instance: &str) -> WalkCertificate {
        WalkCertificate {
            instance: instance.to_string(),
            start: self.layers[0].points[0].to_big(),
            steps,
            end: end.to_big(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachabilityLayer<S> {
    pub depth: usize,
    /// Points first reached at this depth, in discovery order.
    pub points: Vec<Vec<S>>,
    /// Parallel to `points`; `None` only for the source.
    pub links: Vec<Option<StepLink<S>>>,
}

/// Result of a layered search from one source point.
#[derive(Clone, Debug)]
pub struct Reachability<S> {
    pub layers: Vec<ReachabilityLayer<S>>,
    trail: Trail,
}

impl<S: Scalar> Reachability<S> {
    fn from_trail(trail: Trail) -> Self {
        let layers = trail
            .layers
            .iter()
            .enumerate()
            .map(|(depth, layer)| ReachabilityLayer {
                depth,
                points: layer.points.iter().map(HPoint::to_scalars).collect(),
                links: layer
                    .links
                    .iter()
                    .map(|l| {
                        l.as_ref().map(|l| StepLink {
                            parent: l.parent,
                            direction: l.direction,
                            length: S::from_big_ratio(&l.length.to_ratio())
                                .expect("step lengths fit the scalar type"),
                        })
                    })
                    .collect(),
            })
            .collect();
        Self { layers, trail }
    }

    pub fn source(&self) -> &[S] {
        &self.layers[0].points[0]
    }

    /// Depth at which `point` was first reached.
    pub fn depth_of(&self, point: &[S]) -> Option<usize> {
        self.trail
            .locate(&HPoint::from_scalars(point))
            .map(|(d, _)| d)
    }

    /// Union of all layers.
    pub fn point_count(&self) -> usize {
        self.layers.iter().map(|l| l.points.len()).sum()
    }

    /// The walk that first reached `point`.
    pub fn extract_certificate(&self, point: &[S], instance: &str) -> Result<WalkCertificate> {
        let point = HPoint::from_scalars(point);
        let (depth, index) = self.trail.locate(&point).ok_or(Error::NotReached)?;
        Ok(self
            .trail
            .certificate(self.trail.steps_to(depth, index), &point, instance))
    }
}

/// A target found by a search, with the final step when it was detected
/// from the frontier without materializing its layer.
#[derive(Clone, Debug)]
struct Hit {
    depth: usize,
    last: Option<Link>,
}

/// Outcome of [`WalkSpace::search`]: distances to each target plus enough
/// of the layer structure to rebuild the walks.
#[derive(Clone, Debug)]
pub struct TargetSearch {
    trail: Trail,
    targets: Vec<HPoint>,
    hits: Vec<Option<Hit>>,
}

impl TargetSearch {
    pub fn distances(&self) -> Vec<Option<usize>> {
        self.hits
            .iter()
            .map(|h| h.as_ref().map(|h| h.depth))
            .collect()
    }

    pub fn certificate(&self, target: usize, instance: &str) -> Result<WalkCertificate> {
        let hit = self.hits[target].as_ref().ok_or(Error::NotReached)?;
        let point = &self.targets[target];
        let steps = match &hit.last {
            None => {
                let (depth, index) = self.trail.locate(point).ok_or(Error::NotReached)?;
                self.trail.steps_to(depth, index)
            }
            Some(link) => {
                let mut steps = self.trail.steps_to(hit.depth - 1, link.parent);
                steps.push(self.trail.step(link));
                steps
            }
        };
        Ok(self.trail.certificate(steps, point, instance))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SearchMode {
    /// Materialize every layer up to the one completing the targets.
    Layers,
    /// Detect targets one step ahead of the frontier; the last layer is
    /// never built.
    Probe,
}

/// Precomputed circuit data for walking in one polyhedron.
pub struct WalkSpace<'p, S> {
    poly: &'p Polyhedron<S>,
    circuits: CircuitSet,
    rows: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
    steps: Vec<SignedStep>,
    by_zero_rows: HashMap<FixedBitSet, usize>,
}

impl<'p, S: Scalar> WalkSpace<'p, S> {
    pub fn new(poly: &'p Polyhedron<S>) -> Self {
        Self::with_circuits(poly, enumerate_circuits(poly))
    }

    pub fn with_circuits(poly: &'p Polyhedron<S>, circuits: CircuitSet) -> Self {
        let m = poly.facet_count();
        let (rows, rhs): (Vec<Vec<BigInt>>, Vec<BigInt>) = (0..m)
            .map(|i| {
                let mut row: Vec<BigRational> = poly
                    .ineq_matrix()
                    .row(i)
                    .iter()
                    .map(Scalar::to_ratio)
                    .collect();
                row.push(poly.ineq_rhs()[i].to_ratio());
                let scale = row.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
                let mut ints: Vec<BigInt> = row
                    .iter()
                    .map(|q| q.numer() * (&scale / q.denom()))
                    .collect();
                let b = ints.pop().expect("row has a right-hand side");
                (ints, b)
            })
            .unzip();
        let steps: Vec<SignedStep> = (0..circuits.signed_len())
            .map(|i| {
                let direction = circuits.signed(i);
                let image: Vec<BigInt> = rows.iter().map(|a| dot_int(a, &direction)).collect();
                let decreasing = zero_mask(image.iter().map(|a| a.is_negative()), m);
                SignedStep {
                    direction,
                    image,
                    decreasing,
                }
            })
            .collect();
        let by_zero_rows = (0..circuits.len())
            .map(|i| {
                (
                    zero_mask(steps[2 * i].image.iter().map(Zero::is_zero), m),
                    i,
                )
            })
            .collect();
        Self {
            poly,
            circuits,
            rows,
            rhs,
            steps,
            by_zero_rows,
        }
    }

    pub fn polyhedron(&self) -> &Polyhedron<S> {
        self.poly
    }

    pub fn circuits(&self) -> &CircuitSet {
        &self.circuits
    }

    fn state(&self, x: &HPoint) -> PointState {
        let slack: Vec<BigInt> = self
            .rows
            .iter()
            .zip(&self.rhs)
            .map(|(a, b)| dot_int(a, &x.num) - b * &x.den)
            .collect();
        let tight = zero_mask(slack.iter().map(Zero::is_zero), slack.len());
        let approx = approx_slack(&slack, &x.den);
        PointState {
            slack,
            tight,
            approx,
        }
    }

    /// Maximal step along signed circuit `s`, or `None` when it is blocked
    /// or unbounded.
    fn advance(
        &self,
        x: &HPoint,
        st: &PointState,
        s: usize,
    ) -> Option<(Length, HPoint, PointState)> {
        let step = &self.steps[s];
        if step.decreasing.is_clear() || !step.decreasing.is_disjoint(&st.tight) {
            return None;
        }
        // argmin of slack_i / q_i over decreasing rows, q_i = -image_i > 0
        let i = step.decreasing.ones().reduce(|best, i| {
            let lhs = &st.slack[i] * &step.image[best];
            let rhs = &st.slack[best] * &step.image[i];
            // both images negative, so the comparison flips
            if lhs > rhs {
                i
            } else {
                best
            }
        })?;
        let s_i = &st.slack[i];
        let q_i = -&step.image[i];
        let mut num: Vec<BigInt> = x
            .num
            .iter()
            .zip(&step.direction)
            .map(|(n, g)| n * &q_i + s_i * g)
            .collect();
        let mut den = &x.den * &q_i;
        let mut slack: Vec<BigInt> = st
            .slack
            .iter()
            .zip(&step.image)
            .map(|(v, a)| v * &q_i + s_i * a)
            .collect();
        let g = num
            .iter()
            .fold(den.clone(), |g, n| if g.is_one() { g } else { g.gcd(n) });
        if !g.is_one() {
            num.iter_mut().for_each(|n| *n /= &g);
            slack.iter_mut().for_each(|v| *v /= &g);
            den /= &g;
        }
        let length = Length {
            numer: s_i.clone(),
            denom: &x.den * &q_i,
        };
        let tight = zero_mask(slack.iter().map(Zero::is_zero), slack.len());
        let approx = approx_slack(&slack, &den);
        Some((
            length,
            HPoint { num, den },
            PointState {
                slack,
                tight,
                approx,
            },
        ))
    }

    /// If `target` is the endpoint of a single maximal circuit step from
    /// `x`, the signed circuit and step length.
    ///
    /// `t - x` is parallel to a circuit iff the rows where it has zero image
    /// are exactly the zero rows of that circuit; the step is maximal iff
    /// some row tight at `t` is slack at `x`.
    fn one_step_to(
        &self,
        x: &HPoint,
        st: &PointState,
        t: &HPoint,
        tst: &PointState,
    ) -> Option<(usize, Length)> {
        if tst.tight.is_subset(&st.tight) {
            return None;
        }
        let m = st.slack.len();
        let mut zeros = FixedBitSet::with_capacity(m);
        for k in 0..m {
            let equal = match (st.tight.contains(k), tst.tight.contains(k)) {
                (true, true) => true,
                (false, false) => {
                    !certainly_different(st.approx[k], tst.approx[k])
                        && &tst.slack[k] * &x.den == &st.slack[k] * &t.den
                }
                _ => false,
            };
            zeros.set(k, equal);
        }
        let c = *self.by_zero_rows.get(&zeros)?;
        let g = &self.steps[2 * c].direction;
        let j = g.iter().position(|v| !v.is_zero())?;
        // g_j > 0 for the canonical sign
        let diff = &t.num[j] * &x.den - &x.num[j] * &t.den;
        let denom = &t.den * &x.den * &g[j];
        if diff.is_negative() {
            Some((
                2 * c + 1,
                Length {
                    numer: -diff,
                    denom,
                },
            ))
        } else {
            Some((2 * c, Length { numer: diff, denom }))
        }
    }

    /// Layered breadth-first search from `source` over at most `max_depth`
    /// steps, stopping once every target has been reached.
    fn run(
        &self,
        source: &[S],
        max_depth: usize,
        targets: &[Vec<S>],
        mode: SearchMode,
    ) -> TargetSearch {
        let source = HPoint::from_scalars(source);
        let targets: Vec<HPoint> = targets.iter().map(|t| HPoint::from_scalars(t)).collect();
        let mut target_index: HashMap<&HPoint, Vec<usize>> = HashMap::new();
        for (i, t) in targets.iter().enumerate() {
            target_index.entry(t).or_default().push(i);
        }
        let target_states: Vec<PointState> = targets.iter().map(|t| self.state(t)).collect();
        let mut hits: Vec<Option<Hit>> = vec![None; targets.len()];
        for t in target_index.get(&source).into_iter().flatten() {
            hits[*t] = Some(Hit {
                depth: 0,
                last: None,
            });
        }
        let open = |hits: &[Option<Hit>]| hits.iter().any(Option::is_none);

        let mut seen: HashSet<HPoint> = HashSet::from([source.clone()]);
        let mut frontier = vec![self.state(&source)];
        let mut layers = vec![Layer {
            points: vec![source],
            links: vec![None],
        }];

        for depth in 0..max_depth {
            if !targets.is_empty() && !open(&hits) {
                break;
            }
            let current = &layers[depth].points;

            if mode == SearchMode::Probe && !targets.is_empty() {
                let pending: Vec<usize> =
                    (0..targets.len()).filter(|&t| hits[t].is_none()).collect();
                let found: Vec<Vec<(usize, usize, Length)>> = current
                    .par_iter()
                    .zip(frontier.par_iter())
                    .map(|(x, st)| {
                        pending
                            .iter()
                            .filter_map(|&t| {
                                self.one_step_to(x, st, &targets[t], &target_states[t])
                                    .map(|(s, a)| (t, s, a))
                            })
                            .collect()
                    })
                    .collect();
                for (parent, list) in found.into_iter().enumerate() {
                    for (t, direction, length) in list {
                        let last = Some(Link {
                            parent,
                            direction,
                            length,
                        });
                        record(
                            &mut hits,
                            t,
                            Hit {
                                depth: depth + 1,
                                last,
                            },
                        );
                    }
                }
                if !open(&hits) || depth + 1 == max_depth {
                    break;
                }
            }

            let mut next = Layer::default();
            let mut next_states = Vec::new();
            for chunk_start in (0..current.len()).step_by(EXPANSION_CHUNK) {
                let chunk_end = (chunk_start + EXPANSION_CHUNK).min(current.len());
                let successors: Vec<Vec<_>> = (chunk_start..chunk_end)
                    .into_par_iter()
                    .map(|i| {
                        (0..self.steps.len())
                            .filter_map(|s| {
                                self.advance(&current[i], &frontier[i], s)
                                    .filter(|(_, y, _)| !seen.contains(y))
                                    .map(|(length, y, st)| (s, length, y, st))
                            })
                            .collect()
                    })
                    .collect();
                for (offset, list) in successors.into_iter().enumerate() {
                    let parent = chunk_start + offset;
                    for (direction, length, y, st) in list {
                        if !seen.insert(y.clone()) {
                            continue;
                        }
                        for &t in target_index.get(&y).into_iter().flatten() {
                            record(
                                &mut hits,
                                t,
                                Hit {
                                    depth: depth + 1,
                                    last: None,
                                },
                            );
                        }
                        next.points.push(y);
                        next.links.push(Some(Link {
                            parent,
                            direction,
                            length,
                        }));
                        next_states.push(st);
                    }
                }
            }
            let exhausted = next.points.is_empty();
            layers.push(next);
            frontier = next_states;
            if exhausted {
                break;
            }
        }

        TargetSearch {
            trail: Trail {
                layers,
                directions: self.circuits.signed_directions(),
            },
            targets,
            hits,
        }
    }

    /// Every layer of the walk search from `source`, up to `max_depth` or
    /// until all `targets` have appeared.
    pub fn reachable_layers(
        &self,
        source: &[S],
        max_depth: usize,
        targets: &[Vec<S>],
    ) -> Reachability<S> {
        Reachability::from_trail(
            self.run(source, max_depth, targets, SearchMode::Layers)
                .trail,
        )
    }

    /// Circuit distances from `source` to each target within `max_depth`.
    pub fn search(&self, source: &[S], targets: &[Vec<S>], max_depth: usize) -> TargetSearch {
        self.run(source, max_depth, targets, SearchMode::Probe)
    }

    pub fn distance(&self, from: &[S], to: &[S], max_depth: usize) -> Option<usize> {
        self.search(from, &[to.to_vec()], max_depth).distances()[0]
    }

    /// A shortest circuit walk, if one exists within `max_depth`.
    pub fn shortest_walk(
        &self,
        from: &[S],
        to: &[S],
        max_depth: usize,
        instance: &str,
    ) -> Option<WalkCertificate> {
        self.search(from, &[to.to_vec()], max_depth)
            .certificate(0, instance)
            .ok()
    }

    /// Circuit distances between all ordered pairs of `vertices`.
    pub fn distance_matrix(
        &self,
        vertices: &[Vertex<S>],
        max_depth: usize,
    ) -> Vec<Vec<Option<usize>>> {
        let coords: Vec<Vec<S>> = vertices.iter().map(|v| v.coords.clone()).collect();
        coords
            .par_iter()
            .map(|u| self.search(u, &coords, max_depth).distances())
            .collect()
    }
}

fn record(hits: &mut [Option<Hit>], t: usize, hit: Hit) {
    if hits[t].is_none() {
        hits[t] = Some(hit);
    }
}

fn dot_int(a: &[BigInt], x: &[BigInt]) -> BigInt {
    a.iter()
        .zip(x)
        .filter(|(a, _)| !a.is_zero())
        .map(|(a, x)| a * x)
        .sum()
}

fn check_vertex<S: Scalar>(p: &Polyhedron<S>, v: &[S]) -> Result<()> {
    if !p.contains(v)? {
        return Err(Error::Infeasible);
    }
    let tight = p.tight_rows(v)?;
    let m = p
        .eq_matrix()
        .stack(&p.ineq_matrix().select_rows(&tight.zero_based()))?;
    if rank(&m) != p.dim() {
        return Err(Error::UnknownVertex(format!("{v:?} is not a vertex")));
    }
    Ok(())
}

/// Length of a shortest circuit walk from vertex `u` to vertex `v`, or
/// `None` if there is none with at most `max_depth` steps.
pub fn circuit_distance<S: Scalar>(
    p: &Polyhedron<S>,
    u: &[S],
    v: &[S],
    max_depth: usize,
) -> Result<Option<usize>> {
    check_vertex(p, u)?;
    check_vertex(p, v)?;
    Ok(WalkSpace::new(p).distance(u, v, max_depth))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitDiameter {
    pub max_depth: usize,
    /// `None` when some ordered pair needs more than `max_depth` steps.
    pub value: Option<usize>,
    /// `distances[u][v]` is the circuit distance from vertex `u` to `v`.
    pub distances: Vec<Vec<Option<usize>>>,
    /// The first ordered pair attaining the diameter.
    pub witness: Option<(usize, usize)>,
}

impl CircuitDiameter {
    pub fn exceeds(&self) -> bool {
        self.value.is_none()
    }
}

/// Largest circuit distance over ordered pairs of vertices.
pub fn circuit_diameter_of<S: Scalar>(
    space: &WalkSpace<'_, S>,
    vertices: &[Vertex<S>],
    max_depth: usize,
) -> Result<CircuitDiameter> {
    if vertices.len() < 2 {
        return Err(Error::InvalidPolyhedron(
            "circuit diameter needs at least two vertices".into(),
        ));
    }
    let distances = space.distance_matrix(vertices, max_depth);
    let off_diagonal = || {
        distances.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .enumerate()
                .filter(move |(v, _)| *v != u)
                .map(move |(v, d)| (u, v, *d))
        })
    };
    let value = off_diagonal().try_fold(0, |best, (_, _, d)| d.map(|d| best.max(d)));
    let witness = value.and_then(|best| {
        off_diagonal()
            .find(|&(_, _, d)| d == Some(best))
            .map(|(u, v, _)| (u, v))
    });
    Ok(CircuitDiameter {
        max_depth,
        value,
        distances,
        witness,
    })
}

pub fn circuit_diameter<S: Scalar>(p: &Polyhedron<S>, max_depth: usize) -> Result<CircuitDiameter> {
    let vertices = enumerate_vertices(p);
    circuit_diameter_of(&WalkSpace::new(p), &vertices, max_depth)
}

/// The first condition a claimed walk violates.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WalkViolation {
    #[error("dimension mismatch in {0}")]
    DimensionMismatch(String),
    #[error("start point is not a vertex")]
    StartNotVertex,
    #[error("point y{index} is not in the polyhedron")]
    InfeasiblePoint { index: usize },
    #[error("step {step}: direction is not a circuit")]
    NotACircuit { step: usize },
    #[error("step {step}: length must be positive")]
    NonPositiveLength { step: usize },
    #[error("step {step}: not maximal, claimed {claimed} but the maximal step is {maximal}")]
    NonMaximal {
        step: usize,
        claimed: String,
        maximal: String,
    },
    #[error("walk ends at {reached:?}, certificate claims {claimed:?}")]
    EndpointMismatch {
        reached: Vec<String>,
        claimed: Vec<String>,
    },
    #[error("end point is not a vertex")]
    EndNotVertex,
    #[error("{0}")]
    Unrepresentable(String),
}

/// Re-checks a certificate from scratch: every point feasible, every
/// direction a circuit, every length positive and maximal, and the walk
/// ending at the claimed vertex.
pub fn verify_walk<S: Scalar>(
    p: &Polyhedron<S>,
    cert: &WalkCertificate,
) -> std::result::Result<(), WalkViolation> {
    let dim = p.dim();
    let conv = |x: &[num_rational::BigRational]| {
        from_big_point::<S>(x).map_err(|e| WalkViolation::Unrepresentable(e.to_string()))
    };
    if cert.start.len() != dim {
        return Err(WalkViolation::DimensionMismatch("start".into()));
    }
    if cert.end.len() != dim {
        return Err(WalkViolation::DimensionMismatch("end".into()));
    }
    let mut y = conv(&cert.start)?;
    if !p.contains(&y).expect("dimension checked") {
        return Err(WalkViolation::InfeasiblePoint { index: 0 });
    }
    if check_vertex(p, &y).is_err() {
        return Err(WalkViolation::StartNotVertex);
    }
    for (k, step) in cert.steps.iter().enumerate() {
        if step.direction.len() != dim {
            return Err(WalkViolation::DimensionMismatch(format!(
                "step {k} direction"
            )));
        }
        let g: Vec<S> = step
            .direction
            .iter()
            .map(|c| {
                S::from_integer(c).ok_or_else(|| WalkViolation::Unrepresentable(c.to_string()))
            })
            .collect::<std::result::Result<_, _>>()?;
        if g.iter().all(Zero::is_zero) || !is_circuit(p, &g).expect("dimension checked") {
            return Err(WalkViolation::NotACircuit { step: k });
        }
        let alpha = conv(std::slice::from_ref(&step.length))?.remove(0);
        if !alpha.is_positive() {
            return Err(WalkViolation::NonPositiveLength { step: k });
        }
        let next = add_scaled(&y, &alpha, &g);
        if !p.contains(&next).expect("dimension checked") {
            return Err(WalkViolation::InfeasiblePoint { index: k + 1 });
        }
        match max_step(p, &y, &g).expect("feasible point and circuit") {
            StepOutcome::Bounded { length, .. } if length == alpha => {}
            StepOutcome::Bounded { length, .. } => {
                return Err(WalkViolation::NonMaximal {
                    step: k,
                    claimed: alpha.to_string(),
                    maximal: length.to_string(),
                })
            }
            StepOutcome::Unbounded => {
                return Err(WalkViolation::NonMaximal {
                    step: k,
                    claimed: alpha.to_string(),
                    maximal: "unbounded".into(),
                })
            }
            StepOutcome::Blocked => unreachable!("a positive feasible step exists"),
        }
        y = next;
    }
    let claimed = conv(&cert.end)?;
    if y != claimed {
        return Err(WalkViolation::EndpointMismatch {
            reached: y.iter().map(|v| v.to_string()).collect(),
            claimed: claimed.iter().map(|v| v.to_string()).collect(),
        });
    }
    if check_vertex(p, &y).is_err() {
        return Err(WalkViolation::EndNotVertex);
    }
    Ok(())
}
