//! Worker pool for the staged survey: one task per (code, orbit
//! representative), each task single-threaded, results aggregated into one
//! record per code.

use crate::report::PipelineRecord;
use starcw_core::search::{seed_orbit_reps, CodeContext, RepPipeline, StageDepth};
use starcw_core::symmetry::symmetries;
use starcw_core::BinaryCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

/// One input code with its position in the source file.
pub struct CodeTask {
    pub code_index: usize,
    pub code: BinaryCode,
}

/// Applies `f` to every item on up to `jobs` threads, preserving order.
fn parallel_map<T, R, F>(items: Vec<T>, jobs: usize, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    let jobs = jobs.max(1).min(items.len());
    if jobs <= 1 {
        return items.into_iter().map(f).collect();
    }
    let slots: Vec<Mutex<Option<T>>> = items.into_iter().map(|t| Mutex::new(Some(t))).collect();
    let results: Vec<Mutex<Option<R>>> = (0..slots.len()).map(|_| Mutex::new(None)).collect();
    let cursor = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let index = cursor.fetch_add(1, Ordering::Relaxed);
                if index >= slots.len() {
                    return;
                }
                let item = slots[index].lock().unwrap().take().unwrap();
                *results[index].lock().unwrap() = Some(f(item));
            });
        }
    });
    results
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().unwrap())
        .collect()
}

struct RepOutcome {
    pair_solutions: u64,
    quad_solutions: u64,
    nodes: u64,
    exhausted: bool,
}

/// Surveys one representative, cross-checking on the way that every
/// quad-stage solution restricts to exactly the pair-stage solution it
/// extends (the staged instances guarantee this by construction; a failure
/// here would be an internal bug, so it panics).
fn survey_rep(
    ctx: &CodeContext,
    rep: usize,
    depth: StageDepth,
    budget: Option<u64>,
) -> RepOutcome {
    let pipeline = RepPipeline::new(ctx, rep);
    let mut outcome = RepOutcome {
        pair_solutions: 0,
        quad_solutions: 0,
        nodes: 0,
        exhausted: true,
    };
    let stats = pipeline.run_pairs(budget, &mut |pair_solution| {
        outcome.pair_solutions += 1;
        if depth == StageDepth::Quads {
            let stats = pipeline.run_quads(pair_solution, budget, &mut |quad_solution| {
                let triples: Vec<_> = quad_solution
                    .iter()
                    .copied()
                    .filter(|w| w.weight() == 3)
                    .collect();
                assert_eq!(
                    triples, pair_solution,
                    "quad-stage solution must restrict to its pair-stage solution"
                );
                outcome.quad_solutions += 1;
                true
            });
            outcome.nodes += stats.nodes;
            outcome.exhausted &= stats.exhausted;
        }
        true
    });
    outcome.nodes += stats.nodes;
    outcome.exhausted &= stats.exhausted;
    outcome
}

/// Runs the staged survey over every code and aggregates one record per
/// code, ordered by code index. Budget exhaustion on any representative is
/// reported on stderr and clears the record's `exhausted` flag; counts then
/// cover only the part of the space that was searched.
pub fn run_pipeline(
    tasks: Vec<CodeTask>,
    depth: StageDepth,
    budget: Option<u64>,
    jobs: usize,
) -> Vec<PipelineRecord> {
    struct Prep {
        code_index: usize,
        sym_order: u128,
        reps: Vec<usize>,
        ctx: CodeContext,
        seconds: f64,
    }
    let preps: Vec<Prep> = parallel_map(tasks, jobs, |task| {
        let start = Instant::now();
        let group = symmetries(&task.code);
        let reps = seed_orbit_reps(&group);
        let ctx = CodeContext::new(&task.code);
        Prep {
            code_index: task.code_index,
            sym_order: group.order(),
            reps,
            ctx,
            seconds: start.elapsed().as_secs_f64(),
        }
    });
    let rep_tasks: Vec<(usize, usize)> = preps
        .iter()
        .enumerate()
        .flat_map(|(slot, prep)| prep.reps.iter().map(move |&rep| (slot, rep)))
        .collect();
    let surveys = parallel_map(rep_tasks, jobs, |(slot, rep)| {
        let prep = &preps[slot];
        let start = Instant::now();
        let outcome = survey_rep(&prep.ctx, rep, depth, budget);
        if !outcome.exhausted {
            eprintln!(
                "warning: code {} representative {}: node budget exhausted, \
                 counts are a lower bound",
                prep.code_index, rep
            );
        }
        (slot, outcome, start.elapsed().as_secs_f64())
    });
    let mut records: Vec<PipelineRecord> = preps
        .iter()
        .map(|prep| PipelineRecord {
            code_index: prep.code_index,
            sym_order: prep.sym_order,
            orbit_reps: prep.reps.len(),
            s2_solutions: 0,
            s3_solutions: (depth == StageDepth::Quads).then_some(0),
            nodes: 0,
            exhausted: true,
            seconds: prep.seconds,
        })
        .collect();
    for (slot, outcome, seconds) in surveys {
        let record = &mut records[slot];
        record.s2_solutions += outcome.pair_solutions;
        if let Some(count) = record.s3_solutions.as_mut() {
            *count += outcome.quad_solutions;
        }
        record.nodes += outcome.nodes;
        record.exhausted &= outcome.exhausted;
        record.seconds += seconds;
    }
    records.sort_by_key(|record| record.code_index);
    records
}
