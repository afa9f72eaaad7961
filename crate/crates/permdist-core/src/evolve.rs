//! The generational genetic algorithm over permutation chromosomes.
//!
//! One generation ([`next_generation`]): record the incumbent best, then
//! repeatedly draw `r` distinct individuals from the pool without
//! replacement; with probability `p_c` the group is recombined by the
//! algebraic crossover [`ax_crossover`] (all `r!` ordered compositions,
//! keep the `r` fittest), otherwise each member is mutated with probability
//! `p_m` by composition with a random transposition that exchanges one of
//! the first `k` positions with one of the last `n - k`. Leftover
//! individuals pass through unchanged, and elitism reinserts the incumbent
//! over the worst member if its chromosome did not survive.
//!
//! Randomness comes from one seeded stream consumed in a fixed documented
//! order (initial population, then per generation: group index draws, the
//! `p_c` coin per group, and for non-crossed groups a `p_m` coin per member
//! followed by two transposition draws when the coin succeeds). Runs are
//! therefore bit-reproducible from `(code, config)` alone.

use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::clock::Clock;
use crate::code::{fitness, CodeError, LinearCode};
use crate::galois::FieldElement;
use crate::matgf::{next_permutation, Permutation};
use crate::rng::{DefaultRng, RngCore, SeedableRng, StreamExt};

/// Crossover groups evaluate all `r!` compositions, so `r` is capped.
pub const MAX_CROSSOVER_ARITY: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvolveError {
    /// Population size must be at least 2.
    PopulationTooSmall(usize),
    /// Crossover arity must satisfy `2 <= r <= min(p, MAX_CROSSOVER_ARITY)`.
    ArityOutOfRange { r: usize, pop: usize },
    /// A probability lies outside `[0, 1]`.
    ProbabilityOutOfRange(&'static str),
    /// Neither a generation count nor a time budget was given.
    NoStopCondition,
    /// The population passed to `next_generation` has the wrong size.
    WrongPopulationSize { expected: usize, got: usize },
    Code(CodeError),
}

impl fmt::Display for EvolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvolveError::PopulationTooSmall(p) => write!(f, "population size {p} < 2"),
            EvolveError::ArityOutOfRange { r, pop } => write!(
                f,
                "crossover arity {r} outside [2, min(pop={pop}, {MAX_CROSSOVER_ARITY})]"
            ),
            EvolveError::ProbabilityOutOfRange(which) => {
                write!(f, "{which} must lie in [0, 1]")
            }
            EvolveError::NoStopCondition => {
                write!(f, "need a generation limit or a time budget")
            }
            EvolveError::WrongPopulationSize { expected, got } => {
                write!(f, "population has {got} members, expected {expected}")
            }
            EvolveError::Code(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EvolveError {}

impl From<CodeError> for EvolveError {
    fn from(e: CodeError) -> Self {
        EvolveError::Code(e)
    }
}

/// Hyperparameters of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct GaConfig {
    /// Population size `p >= 2`.
    pub pop_size: usize,
    /// Crossover arity `r` (groups of `r`, `r!` compositions).
    pub crossover_arity: usize,
    /// Probability that a drawn group is crossed.
    pub crossover_prob: f64,
    /// Per-member mutation probability for non-crossed groups.
    pub mutation_prob: f64,
    /// Maximum number of generations, if bounded.
    pub max_generations: Option<u64>,
    /// Wall-clock budget, if bounded (requires a non-null [`Clock`]).
    pub time_budget: Option<Duration>,
    /// Seed for the single random stream.
    pub seed: u64,
    /// Optional early-stop threshold: stop once the best bound is `<=` this.
    pub target: Option<usize>,
}

impl GaConfig {
    pub fn validate(&self) -> Result<(), EvolveError> {
        if self.pop_size < 2 {
            return Err(EvolveError::PopulationTooSmall(self.pop_size));
        }
        let r = self.crossover_arity;
        if r < 2 || r > self.pop_size || r > MAX_CROSSOVER_ARITY {
            return Err(EvolveError::ArityOutOfRange {
                r,
                pop: self.pop_size,
            });
        }
        if !(0.0..=1.0).contains(&self.crossover_prob) {
            return Err(EvolveError::ProbabilityOutOfRange("crossover probability"));
        }
        if !(0.0..=1.0).contains(&self.mutation_prob) {
            return Err(EvolveError::ProbabilityOutOfRange("mutation probability"));
        }
        if self.max_generations.is_none() && self.time_budget.is_none() {
            return Err(EvolveError::NoStopCondition);
        }
        Ok(())
    }
}

/// A chromosome with its cached evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Individual {
    pub chromosome: Permutation,
    /// Cached fitness of `chromosome` for the code it was evaluated on.
    pub fitness: usize,
    /// Cached witness codeword of weight `fitness`.
    pub witness: Vec<FieldElement>,
}

impl Individual {
    pub fn evaluate(code: &LinearCode, chromosome: Permutation) -> Result<Self, CodeError> {
        let fr = fitness(code, &chromosome)?;
        Ok(Individual {
            chromosome,
            fitness: fr.value,
            witness: fr.witness,
        })
    }
}

/// Outcome record of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStats {
    pub best_value: usize,
    pub best_permutation: Permutation,
    pub best_witness: Vec<FieldElement>,
    /// Generation at which the best bound first appeared (0 = initial
    /// population).
    pub generation_of_best: u64,
    pub generations_run: u64,
    pub fitness_evaluations: u64,
    pub wall_time: Duration,
    /// Elapsed time when the best bound first appeared.
    pub time_of_best: Duration,
}

fn argmin_fitness(pop: &[Individual]) -> usize {
    let mut best = 0;
    for (i, ind) in pop.iter().enumerate().skip(1) {
        if ind.fitness < pop[best].fitness {
            best = i;
        }
    }
    best
}

fn argmax_fitness(pop: &[Individual]) -> usize {
    let mut worst = 0;
    for (i, ind) in pop.iter().enumerate().skip(1) {
        // Ties resolve to the highest index.
        if ind.fitness >= pop[worst].fitness {
            worst = i;
        }
    }
    worst
}

fn factorial(r: usize) -> usize {
    (1..=r).product()
}

/// Algebraic crossover `AX_r`: form all `r!` ordered compositions of the
/// group's chromosomes (orderings enumerated lexicographically), evaluate
/// them, and return the `r` fittest (ties broken by enumeration order). The
/// originals are replaced, never retained.
pub fn ax_crossover(
    code: &LinearCode,
    group: Vec<Individual>,
) -> Result<Vec<Individual>, EvolveError> {
    let r = group.len();
    if r < 2 || r > MAX_CROSSOVER_ARITY {
        return Err(EvolveError::ArityOutOfRange { r, pop: r });
    }
    let mut order: Vec<usize> = (0..r).collect();
    let mut candidates: Vec<Individual> = Vec::with_capacity(factorial(r));
    loop {
        let mut composed = group[order[0]].chromosome.clone();
        for &idx in &order[1..] {
            composed = composed
                .compose(&group[idx].chromosome)
                .expect("group chromosomes share one degree");
        }
        candidates.push(Individual::evaluate(code, composed)?);
        if !next_permutation(&mut order) {
            break;
        }
    }
    let mut ranked: Vec<usize> = (0..candidates.len()).collect();
    ranked.sort_by_key(|&i| (candidates[i].fitness, i));
    Ok(ranked
        .into_iter()
        .take(r)
        .map(|i| candidates[i].clone())
        .collect())
}

/// With probability `p_m`, compose the chromosome with a random
/// transposition exchanging a position `< k` with a position `>= k` (under
/// the pull convention this swaps an information column of the permuted
/// matrix with a redundancy column). Consumes one coin always, plus two
/// bounded draws when the mutation fires.
pub fn mutate<R: RngCore + ?Sized>(
    rng: &mut R,
    code: &LinearCode,
    individual: Individual,
    mutation_prob: f64,
) -> Result<Individual, EvolveError> {
    if !rng.next_coin(mutation_prob) {
        return Ok(individual);
    }
    let t = Permutation::random_cross_transposition(rng, code.n(), code.k())
        .map_err(CodeError::from)?;
    let chromosome = individual
        .chromosome
        .compose(&t)
        .expect("transposition has the code's degree");
    Ok(Individual::evaluate(code, chromosome)?)
}

#[derive(Debug, Default, Clone, Copy)]
struct GenCounts {
    evaluations: u64,
    crossovers: u64,
    mutations: u64,
}

fn next_generation_counted<R: RngCore + ?Sized>(
    rng: &mut R,
    code: &LinearCode,
    mut pool: Vec<Individual>,
    config: &GaConfig,
) -> Result<(Vec<Individual>, GenCounts), EvolveError> {
    let p = config.pop_size;
    if pool.len() != p {
        return Err(EvolveError::WrongPopulationSize {
            expected: p,
            got: pool.len(),
        });
    }
    let r = config.crossover_arity;
    let mut counts = GenCounts::default();

    // Incumbent best; ties resolve to the lowest index.
    let best = pool[argmin_fitness(&pool)].clone();

    let mut next = Vec::with_capacity(p);
    while pool.len() >= r {
        let mut group = Vec::with_capacity(r);
        for _ in 0..r {
            let idx = rng.next_below(pool.len() as u64) as usize;
            group.push(pool.remove(idx));
        }
        if rng.next_coin(config.crossover_prob) {
            next.extend(ax_crossover(code, group)?);
            counts.crossovers += 1;
            counts.evaluations += factorial(r) as u64;
        } else {
            for member in group {
                let before = member.chromosome.clone();
                let out = mutate(rng, code, member, config.mutation_prob)?;
                if out.chromosome != before {
                    counts.mutations += 1;
                    counts.evaluations += 1;
                }
                next.push(out);
            }
        }
    }
    // Fewer than r leftovers pass through unmodified.
    next.append(&mut pool);

    // Elitism: reinsert the incumbent (by chromosome identity) over the
    // worst member if it did not survive.
    if !next.iter().any(|i| i.chromosome == best.chromosome) {
        let worst = argmax_fitness(&next);
        next[worst] = best;
    }
    debug_assert_eq!(next.len(), p);
    Ok((next, counts))
}

/// One generation step; see the module docs for the exact procedure.
pub fn next_generation<R: RngCore + ?Sized>(
    rng: &mut R,
    code: &LinearCode,
    population: Vec<Individual>,
    config: &GaConfig,
) -> Result<Vec<Individual>, EvolveError> {
    config.validate()?;
    next_generation_counted(rng, code, population, config).map(|(pop, _)| pop)
}

/// A run in progress: owns the population, the stream, and the best-so-far
/// record. [`run`] drives it to completion; stepping manually is useful for
/// instrumentation.
pub struct Ga {
    code: LinearCode,
    config: GaConfig,
    rng: DefaultRng,
    population: Vec<Individual>,
    generation: u64,
    evaluations: u64,
    best: Individual,
    generation_of_best: u64,
    time_of_best: Duration,
    best_history: Vec<usize>,
}

impl Ga {
    pub fn new(code: LinearCode, config: GaConfig) -> Result<Self, EvolveError> {
        config.validate()?;
        let mut rng = DefaultRng::seed_from_u64(config.seed);
        let mut population = Vec::with_capacity(config.pop_size);
        for _ in 0..config.pop_size {
            let chromosome = Permutation::random(&mut rng, code.n());
            population.push(Individual::evaluate(&code, chromosome)?);
        }
        let evaluations = config.pop_size as u64;
        let best = population[argmin_fitness(&population)].clone();
        let best_value = best.fitness;
        Ok(Ga {
            code,
            config,
            rng,
            population,
            generation: 0,
            evaluations,
            best,
            generation_of_best: 0,
            time_of_best: Duration::ZERO,
            best_history: alloc::vec![best_value],
        })
    }

    pub fn population(&self) -> &[Individual] {
        &self.population
    }

    pub fn generation(&self) -> u64 {
        self.generation
    }

    pub fn best(&self) -> &Individual {
        &self.best
    }

    /// Best fitness after the initial population and after each generation.
    pub fn best_history(&self) -> &[usize] {
        &self.best_history
    }

    /// True once the generation limit, time budget, or target is reached.
    pub fn should_stop<K: Clock>(&self, clock: &K) -> bool {
        if let Some(target) = self.config.target {
            if self.best.fitness <= target {
                return true;
            }
        }
        if let Some(c) = self.config.max_generations {
            if self.generation >= c {
                return true;
            }
        }
        if let Some(t) = self.config.time_budget {
            if clock.elapsed() >= t {
                return true;
            }
        }
        false
    }

    /// Advances one generation, updating the best-so-far record.
    pub fn step<K: Clock>(&mut self, clock: &K) -> Result<(), EvolveError> {
        let pool = core::mem::take(&mut self.population);
        let (next, counts) = next_generation_counted(&mut self.rng, &self.code, pool, &self.config)?;
        self.population = next;
        self.generation += 1;
        self.evaluations += counts.evaluations;
        let idx = argmin_fitness(&self.population);
        let current = &self.population[idx];
        // Elitism makes the per-generation best non-increasing.
        assert!(
            current.fitness <= self.best.fitness,
            "elitism violated: best fitness rose from {} to {} at generation {}",
            self.best.fitness,
            current.fitness,
            self.generation
        );
        if current.fitness < self.best.fitness {
            self.generation_of_best = self.generation;
            self.time_of_best = clock.elapsed();
        }
        // Track the copy living in the current population, so the reported
        // individual is always a member of the final one.
        self.best = current.clone();
        self.best_history.push(self.best.fitness);
        Ok(())
    }

    pub fn stats<K: Clock>(&self, clock: &K) -> RunStats {
        RunStats {
            best_value: self.best.fitness,
            best_permutation: self.best.chromosome.clone(),
            best_witness: self.best.witness.clone(),
            generation_of_best: self.generation_of_best,
            generations_run: self.generation,
            fitness_evaluations: self.evaluations,
            wall_time: clock.elapsed(),
            time_of_best: self.time_of_best,
        }
    }
}

/// Runs the full algorithm: seed the stream, draw the initial population,
/// evolve until a stop condition holds, and report the best bound found.
pub fn run<K: Clock>(
    code: &LinearCode,
    config: &GaConfig,
    clock: &K,
) -> Result<RunStats, EvolveError> {
    let mut ga = Ga::new(code.clone(), config.clone())?;
    while !ga.should_stop(clock) {
        ga.step(clock)?;
    }
    Ok(ga.stats(clock))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clock::NullClock;
    use crate::code::{exact_distance, random_search, DEFAULT_CODEWORD_BUDGET};
    use crate::constructions::{f8_demo_code, random_code, repetition_code};
    use crate::galois::FieldSpec;

    fn config(pop: usize, r: usize, pc: f64, pm: f64, gens: u64, seed: u64) -> GaConfig {
        GaConfig {
            pop_size: pop,
            crossover_arity: r,
            crossover_prob: pc,
            mutation_prob: pm,
            max_generations: Some(gens),
            time_budget: None,
            seed,
            target: None,
        }
    }

    fn sorted_images(pop: &[Individual]) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = pop
            .iter()
            .map(|i| i.chromosome.images().to_vec())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn config_validation() {
        let c = f8_demo_code();
        assert!(Ga::new(c.clone(), config(1, 2, 0.5, 0.5, 10, 0)).is_err());
        assert!(Ga::new(c.clone(), config(4, 6, 0.5, 0.5, 10, 0)).is_err());
        assert!(Ga::new(c.clone(), config(4, 2, 1.5, 0.5, 10, 0)).is_err());
        let mut unbounded = config(4, 2, 0.5, 0.5, 10, 0);
        unbounded.max_generations = None;
        assert_eq!(
            Ga::new(c, unbounded).err(),
            Some(EvolveError::NoStopCondition)
        );
    }

    #[test]
    fn crossover_arity_two_returns_both_compositions() {
        let code = f8_demo_code();
        let mut rng = DefaultRng::seed_from_u64(7);
        let a = Individual::evaluate(&code, Permutation::random(&mut rng, 6)).unwrap();
        let b = Individual::evaluate(&code, Permutation::random(&mut rng, 6)).unwrap();
        let ab = a.chromosome.compose(&b.chromosome).unwrap();
        let ba = b.chromosome.compose(&a.chromosome).unwrap();
        let out = ax_crossover(&code, vec![a, b]).unwrap();
        assert_eq!(out.len(), 2);
        let got = sorted_images(&out);
        let mut expect = vec![ab.images().to_vec(), ba.images().to_vec()];
        expect.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn crossover_of_identities_is_identity() {
        let code = f8_demo_code();
        let id = Individual::evaluate(&code, Permutation::identity(6)).unwrap();
        let out = ax_crossover(&code, vec![id.clone(), id.clone(), id]).unwrap();
        assert_eq!(out.len(), 3);
        assert!(out.iter().all(|i| i.chromosome.is_identity()));
    }

    #[test]
    fn crossover_selects_smallest_of_all_compositions() {
        let code = f8_demo_code();
        let mut rng = DefaultRng::seed_from_u64(19);
        let group: Vec<Individual> = (0..3)
            .map(|_| Individual::evaluate(&code, Permutation::random(&mut rng, 6)).unwrap())
            .collect();

        // Independent enumeration of all 6 ordered compositions.
        let mut expected = Vec::new();
        for perm in [
            [0usize, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            let composed = group[perm[0]]
                .chromosome
                .compose(&group[perm[1]].chromosome)
                .unwrap()
                .compose(&group[perm[2]].chromosome)
                .unwrap();
            expected.push(Individual::evaluate(&code, composed).unwrap().fitness);
        }
        expected.sort_unstable();

        let out = ax_crossover(&code, group).unwrap();
        let mut got: Vec<usize> = out.iter().map(|i| i.fitness).collect();
        got.sort_unstable();
        assert_eq!(got, expected[..3]);
    }

    #[test]
    fn mutation_probability_zero_is_identity() {
        let code = f8_demo_code();
        let mut rng = DefaultRng::seed_from_u64(23);
        let ind = Individual::evaluate(&code, Permutation::random(&mut rng, 6)).unwrap();
        for _ in 0..20 {
            let out = mutate(&mut rng, &code, ind.clone(), 0.0).unwrap();
            assert_eq!(out, ind);
        }
    }

    #[test]
    fn mutation_composes_with_cross_transposition() {
        // n=2, k=1: the only transposition is (0 1).
        let f = FieldSpec::gf(2, 1).unwrap();
        let code = repetition_code(f, 2).unwrap();
        let mut rng = DefaultRng::seed_from_u64(29);
        let id = Individual::evaluate(&code, Permutation::identity(2)).unwrap();
        let out = mutate(&mut rng, &code, id, 1.0).unwrap();
        assert_eq!(out.chromosome.images(), &[1, 0]);

        // A fired mutation changes exactly two images.
        let code6 = f8_demo_code();
        for _ in 0..50 {
            let ind = Individual::evaluate(&code6, Permutation::random(&mut rng, 6)).unwrap();
            let out = mutate(&mut rng, &code6, ind.clone(), 1.0).unwrap();
            let moved = (0..6)
                .filter(|&j| out.chromosome.image(j) != ind.chromosome.image(j))
                .count();
            assert_eq!(moved, 2);
        }
    }

    #[test]
    fn generation_with_operators_disabled_permutes_population() {
        let code = f8_demo_code();
        let cfg = config(5, 2, 0.0, 0.0, 1, 99);
        let mut ga = Ga::new(code.clone(), cfg.clone()).unwrap();
        let before = sorted_images(ga.population());
        ga.step(&NullClock).unwrap();
        let after = sorted_images(ga.population());
        assert_eq!(before, after);
        assert_eq!(ga.population().len(), 5);
    }

    #[test]
    fn whole_population_group_is_always_crossed() {
        let code = f8_demo_code();
        let cfg = config(2, 2, 1.0, 1.0, 1, 7);
        let mut ga = Ga::new(code.clone(), cfg).unwrap();
        let a = ga.population()[0].chromosome.clone();
        let b = ga.population()[1].chromosome.clone();
        ga.step(&NullClock).unwrap();
        // With p = r = 2 and p_c = 1 the only group is crossed, never
        // mutated, so the result is exactly the two compositions (up to the
        // elitism reinsertion, which can only replace one by a or b).
        let ab = a.compose(&b).unwrap();
        let ba = b.compose(&a).unwrap();
        for ind in ga.population() {
            let im = ind.chromosome.images();
            assert!(
                im == ab.images()
                    || im == ba.images()
                    || im == a.images()
                    || im == b.images()
            );
        }
    }

    #[test]
    fn elitism_reinserts_lost_best() {
        let code = f8_demo_code();
        // Mutation always fires, crossover never: the best chromosome is
        // destroyed in every group, so elitism must restore it.
        let cfg = config(4, 2, 0.0, 1.0, 30, 11);
        let mut ga = Ga::new(code.clone(), cfg).unwrap();
        for _ in 0..30 {
            let best_before = ga.best().fitness;
            ga.step(&NullClock).unwrap();
            let pop_best = ga
                .population()
                .iter()
                .map(|i| i.fitness)
                .min()
                .unwrap();
            assert!(pop_best <= best_before);
            assert!(ga
                .population()
                .iter()
                .any(|i| i.chromosome == ga.best().chromosome));
        }
    }

    #[test]
    fn zero_generations_equals_random_search_over_population() {
        let code = f8_demo_code();
        let cfg = config(6, 2, 0.7, 1.0, 0, 1234);
        let stats = run(&code, &cfg, &NullClock).unwrap();
        assert_eq!(stats.generations_run, 0);
        assert_eq!(stats.generation_of_best, 0);
        assert_eq!(stats.fitness_evaluations, 6);
        // Same seed, same draws: equivalent to a 6-sample random search.
        let mut rng = DefaultRng::seed_from_u64(1234);
        let rs = random_search(&code, 6, &mut rng).unwrap();
        assert_eq!(stats.best_value, rs.value);
    }

    #[test]
    fn repetition_code_is_solved_at_generation_zero() {
        let f = FieldSpec::gf(2, 1).unwrap();
        let code = repetition_code(f, 5).unwrap();
        let stats = run(&code, &config(4, 2, 0.7, 1.0, 3, 5), &NullClock).unwrap();
        assert_eq!(stats.best_value, 5);
        assert_eq!(stats.generation_of_best, 0);
    }

    #[test]
    fn runs_are_deterministic() {
        let code = f8_demo_code();
        let cfg = config(5, 2, 0.7, 1.0, 40, 77);
        let a = run(&code, &cfg, &NullClock).unwrap();
        let b = run(&code, &cfg, &NullClock).unwrap();
        assert_eq!(a, b);
        let mut ga1 = Ga::new(code.clone(), cfg.clone()).unwrap();
        let mut ga2 = Ga::new(code, cfg).unwrap();
        for _ in 0..40 {
            ga1.step(&NullClock).unwrap();
            ga2.step(&NullClock).unwrap();
        }
        assert_eq!(ga1.population(), ga2.population());
    }

    #[test]
    fn population_size_is_invariant() {
        let code = f8_demo_code();
        for (pop, r) in [(5usize, 2usize), (6, 3), (7, 2), (4, 4)] {
            let cfg = config(pop, r, 0.5, 0.5, 10, 3);
            let mut ga = Ga::new(code.clone(), cfg).unwrap();
            for _ in 0..10 {
                ga.step(&NullClock).unwrap();
                assert_eq!(ga.population().len(), pop);
                for ind in ga.population() {
                    assert_eq!(ind.chromosome.n(), 6);
                }
            }
        }
    }

    #[test]
    fn best_history_is_monotone() {
        let code = f8_demo_code();
        let cfg = config(6, 3, 0.6, 0.8, 50, 13);
        let mut ga = Ga::new(code, cfg).unwrap();
        for _ in 0..50 {
            ga.step(&NullClock).unwrap();
        }
        let h = ga.best_history();
        assert_eq!(h.len(), 51);
        assert!(h.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn early_stop_on_target() {
        let code = f8_demo_code();
        let mut cfg = config(5, 2, 0.7, 1.0, 1000, 21);
        let d = exact_distance(&code, DEFAULT_CODEWORD_BUDGET).unwrap();
        cfg.target = Some(d);
        let stats = run(&code, &cfg, &NullClock).unwrap();
        assert_eq!(stats.best_value, d);
        assert!(stats.generations_run < 1000);
    }

    #[test]
    fn ga_finds_exact_distance_on_small_codes() {
        let mut rng = DefaultRng::seed_from_u64(555);
        let f = FieldSpec::gf(2, 1).unwrap();
        for seed in 0..5u64 {
            let code = random_code(&mut rng, f.clone(), 8, 3).unwrap();
            let d = exact_distance(&code, DEFAULT_CODEWORD_BUDGET).unwrap();
            let stats = run(&code, &config(10, 2, 0.7, 1.0, 300, seed), &NullClock).unwrap();
            assert!(stats.best_value >= d);
            assert_eq!(stats.best_value, d, "seed {seed}");
            assert!(code.contains(&stats.best_witness));
        }
    }
}
