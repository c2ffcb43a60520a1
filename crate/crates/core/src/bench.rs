//! Wall-clock comparison of the survivor algorithms over a parameter
//! sweep, with CSV output and a standalone SVG line chart.
//!
//! Every timed run covers exactly one algorithm call: instance
//! construction, warmup, and result verification sit outside the clock.
//! Before any timing, each sweep point's survivor is pinned against a
//! reference (the brute-force simulation at desk scale, algorithm
//! agreement above it) and every timed result is compared against it —
//! wrong answers are never timed quietly.

use std::hint::black_box;
use std::io::{BufRead, Write};
use std::time::Instant;

use crate::error::{Error, Result};
use crate::instance::{Indexing, JosephusInstance};
use crate::oracle::simulate;
use crate::solver::{solve, solve_block, solve_orbit, Algorithm};

/// Which parameter a sweep varies; the other stays fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    N,
    K,
}

/// One timing sweep: vary `n` or `k` over `from..=to` in `step`
/// increments, holding the other parameter at `fixed`, timing each
/// selected algorithm `reps` times per point after `warmup` unrecorded
/// runs.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sweep: SweepAxis,
    pub fixed: u64,
    pub from: u64,
    pub to: u64,
    pub step: u64,
    pub reps: u32,
    pub warmup: u32,
    pub algorithms: Vec<Algorithm>,
}

impl BenchConfig {
    /// A sweep over all three algorithms with the default warmup of 10
    /// unrecorded runs per point.
    pub fn new(sweep: SweepAxis, fixed: u64, from: u64, to: u64, step: u64, reps: u32) -> Self {
        Self {
            sweep,
            fixed,
            from,
            to,
            step,
            reps,
            warmup: 10,
            algorithms: Algorithm::ALL.to_vec(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.from > self.to {
            return Err(Error::InvalidParameter("sweep range must have from <= to"));
        }
        if self.step == 0 {
            return Err(Error::InvalidParameter("sweep step must be at least 1"));
        }
        if self.reps == 0 {
            return Err(Error::InvalidParameter("reps must be at least 1"));
        }
        Ok(())
    }

    /// The `(n, k)` pairs this sweep visits, in order.
    pub fn points(&self) -> Vec<(u64, u64)> {
        let mut points = Vec::new();
        let mut v = self.from;
        loop {
            points.push(match self.sweep {
                SweepAxis::N => (v, self.fixed),
                SweepAxis::K => (self.fixed, v),
            });
            match v.checked_add(self.step) {
                Some(next) if next <= self.to => v = next,
                _ => break,
            }
        }
        points
    }
}

/// Timing of one algorithm at one sweep point. All times are wall-clock
/// nanoseconds from a monotonic clock; `mean_ns` is `total_ns / reps`.
///
/// A sample with `reps == 0` records a measurement that could not run
/// (the block algorithm tripping its recursion guard); its time fields
/// are all zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchSample {
    pub algorithm: Algorithm,
    pub n: u64,
    pub k: u64,
    pub reps: u32,
    pub total_ns: u64,
    pub mean_ns: u64,
    pub min_ns: u64,
    pub max_ns: u64,
}

/// Run the sweep: one sample per point per selected algorithm, in sweep
/// order. Strictly sequential and single-threaded.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchSample>> {
    cfg.validate()?;
    let mut samples = Vec::new();
    for (n, k) in cfg.points() {
        let inst = JosephusInstance::new(n, k)?;
        let expected = reference_survivor(inst)?;
        for &algo in &cfg.algorithms {
            samples.push(time_algorithm(inst, algo, expected, cfg.reps, cfg.warmup));
        }
    }
    Ok(samples)
}

/// A survivor value the timed algorithms must reproduce: the brute-force
/// simulation where it is cheap, otherwise agreement between the two
/// O(k log n) algorithms (or the orbit alone if block cannot run at all).
fn reference_survivor(inst: JosephusInstance) -> Result<u64> {
    let orbit = solve_orbit(inst, Indexing::OneBased)?;
    if inst.n() <= 10_000 {
        let simulated = simulate(inst)?.survivor();
        assert_eq!(orbit, simulated, "orbit disagrees with the simulation");
        return Ok(simulated);
    }
    if let Ok(block) = solve_block(inst, Indexing::OneBased) {
        assert_eq!(orbit, block, "orbit and block disagree");
    }
    Ok(orbit)
}

fn time_algorithm(
    inst: JosephusInstance,
    algo: Algorithm,
    expected: u64,
    reps: u32,
    warmup: u32,
) -> BenchSample {
    let failed = BenchSample {
        algorithm: algo,
        n: inst.n(),
        k: inst.k(),
        reps: 0,
        total_ns: 0,
        mean_ns: 0,
        min_ns: 0,
        max_ns: 0,
    };

    // dry run: if the algorithm cannot handle this point, record a failed
    // sample instead of crashing the sweep
    match solve(inst, algo, Indexing::OneBased) {
        Err(_) => return failed,
        Ok(v) => assert_eq!(
            v,
            expected,
            "{algo} is wrong at n={} k={}",
            inst.n(),
            inst.k()
        ),
    }

    for _ in 0..warmup {
        let _ = black_box(solve(black_box(inst), algo, Indexing::OneBased));
    }

    let mut total = 0u64;
    let mut min = u64::MAX;
    let mut max = 0u64;
    for _ in 0..reps {
        let started = Instant::now();
        let result = solve(black_box(inst), algo, Indexing::OneBased);
        let elapsed = started.elapsed().as_nanos() as u64;
        let value = result.expect("algorithm failed after a clean dry run");
        assert_eq!(value, expected, "{algo} went wrong mid-benchmark");
        black_box(value);
        total += elapsed;
        min = min.min(elapsed);
        max = max.max(elapsed);
    }
    BenchSample {
        algorithm: algo,
        n: inst.n(),
        k: inst.k(),
        reps,
        total_ns: total,
        mean_ns: total / u64::from(reps),
        min_ns: min,
        max_ns: max,
    }
}

const CSV_HEADER: &str = "algorithm,n,k,reps,mean_ns,min_ns,max_ns,total_ns";

/// Write samples as CSV: a fixed header, then one row per sample in order.
pub fn write_csv<W: Write>(samples: &[BenchSample], mut out: W) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for s in samples {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            s.algorithm, s.n, s.k, s.reps, s.mean_ns, s.min_ns, s.max_ns, s.total_ns
        )?;
    }
    Ok(())
}

/// Parse CSV produced by [`write_csv`]. `read_csv(write_csv(samples)) ==
/// samples` holds exactly.
pub fn read_csv<R: BufRead>(input: R) -> Result<Vec<BenchSample>> {
    let mut lines = input.lines();
    match lines.next() {
        Some(Ok(header)) if header == CSV_HEADER => {}
        Some(Ok(header)) => return Err(Error::CsvFormat(format!("unexpected header: {header}"))),
        Some(Err(err)) => return Err(err.into()),
        None => return Err(Error::CsvFormat("missing header".into())),
    }
    let mut samples = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line?;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(Error::CsvFormat(format!(
                "row {}: expected 8 fields, found {}",
                idx + 1,
                fields.len()
            )));
        }
        let numeric = |s: &str| -> Result<u64> {
            s.parse()
                .map_err(|_| Error::CsvFormat(format!("row {}: bad number {s:?}", idx + 1)))
        };
        samples.push(BenchSample {
            algorithm: fields[0].parse().map_err(|_| {
                Error::CsvFormat(format!("row {}: bad algorithm {:?}", idx + 1, fields[0]))
            })?,
            n: numeric(fields[1])?,
            k: numeric(fields[2])?,
            reps: numeric(fields[3])? as u32,
            mean_ns: numeric(fields[4])?,
            min_ns: numeric(fields[5])?,
            max_ns: numeric(fields[6])?,
            total_ns: numeric(fields[7])?,
        });
    }
    Ok(samples)
}

const CHART_WIDTH: f64 = 800.0;
const CHART_HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 90.0;
const MARGIN_RIGHT: f64 = 150.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;

fn color(algo: Algorithm) -> &'static str {
    match algo {
        Algorithm::Orbit => "#1f77b4",
        Algorithm::Linear => "#d62728",
        Algorithm::Block => "#2ca02c",
    }
}

/// Render samples as a standalone SVG 1.1 line chart and write it out.
///
/// X is the swept parameter, Y the mean time in nanoseconds, one polyline
/// per algorithm, linear axes. Identical samples produce byte-identical
/// output.
pub fn render_svg<W: Write>(samples: &[BenchSample], sweep: SweepAxis, mut out: W) -> Result<()> {
    let document = svg_document(samples, sweep)?;
    out.write_all(document.as_bytes())?;
    Ok(())
}

/// The chart document itself; see [`render_svg`].
pub fn svg_document(samples: &[BenchSample], sweep: SweepAxis) -> Result<String> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    let x_of = |s: &BenchSample| match sweep {
        SweepAxis::N => s.n,
        SweepAxis::K => s.k,
    };
    let x_min = samples.iter().map(&x_of).min().unwrap() as f64;
    let x_max = samples.iter().map(&x_of).max().unwrap() as f64;
    let y_max = samples.iter().map(|s| s.mean_ns).max().unwrap().max(1) as f64;
    let x_span = (x_max - x_min).max(1.0);

    let plot_w = CHART_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = CHART_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |v: f64| MARGIN_LEFT + (v - x_min) / x_span * plot_w;
    let sy = |v: f64| MARGIN_TOP + plot_h - v / y_max * plot_h;

    let (x_label, fixed_label) = match sweep {
        SweepAxis::N => ("n", format!("k = {}", samples[0].k)),
        SweepAxis::K => ("k", format!("n = {}", samples[0].n)),
    };

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{CHART_WIDTH}\" height=\"{CHART_HEIGHT}\" viewBox=\"0 0 {CHART_WIDTH} {CHART_HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">mean solve time ({fixed_label})</text>\n",
        MARGIN_LEFT + plot_w / 2.0
    ));

    // axes
    let x0 = MARGIN_LEFT;
    let y0 = MARGIN_TOP + plot_h;
    svg.push_str(&format!(
        "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>\n",
        x0 + plot_w
    ));
    svg.push_str(&format!(
        "<line x1=\"{x0:.2}\" y1=\"{:.2}\" x2=\"{x0:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>\n",
        MARGIN_TOP
    ));

    // ticks and labels
    for i in 0..=4u32 {
        let frac = f64::from(i) / 4.0;
        let xv = x_min + frac * x_span;
        let xpix = sx(xv);
        svg.push_str(&format!(
            "<line x1=\"{xpix:.2}\" y1=\"{y0:.2}\" x2=\"{xpix:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
            y0 + 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{xpix:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{:.0}</text>\n",
            y0 + 18.0,
            xv
        ));
        let yv = frac * y_max;
        let ypix = sy(yv);
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{ypix:.2}\" x2=\"{x0:.2}\" y2=\"{ypix:.2}\" stroke=\"black\"/>\n",
            x0 - 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.0}</text>\n",
            x0 - 8.0,
            ypix + 4.0,
            yv
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">{x_label}</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        y0 + 40.0
    ));
    svg.push_str(&format!(
        "<text x=\"20\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 20 {:.2})\">mean time (ns)</text>\n",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    ));

    // one polyline per algorithm, in fixed order, points in sample order
    let mut legend_row = 0u32;
    for algo in Algorithm::ALL {
        let series: Vec<&BenchSample> = samples.iter().filter(|s| s.algorithm == algo).collect();
        if series.is_empty() {
            continue;
        }
        let points: Vec<String> = series
            .iter()
            .map(|s| format!("{:.2},{:.2}", sx(x_of(s) as f64), sy(s.mean_ns as f64)))
            .collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            color(algo),
            points.join(" ")
        ));
        let ly = MARGIN_TOP + 14.0 + f64::from(legend_row) * 18.0;
        let lx = MARGIN_LEFT + plot_w + 16.0;
        svg.push_str(&format!(
            "<line x1=\"{lx:.2}\" y1=\"{ly:.2}\" x2=\"{:.2}\" y2=\"{ly:.2}\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
            lx + 22.0,
            color(algo)
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\">{algo}</text>\n",
            lx + 28.0,
            ly + 4.0
        ));
        legend_row += 1;
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(algo: Algorithm, n: u64, mean: u64) -> BenchSample {
        BenchSample {
            algorithm: algo,
            n,
            k: 2,
            reps: 3,
            total_ns: mean * 3,
            mean_ns: mean,
            min_ns: mean.saturating_sub(1),
            max_ns: mean + 1,
        }
    }

    #[test]
    fn degenerate_sweep_yields_one_sample() {
        let cfg = BenchConfig {
            algorithms: vec![Algorithm::Orbit],
            warmup: 0,
            ..BenchConfig::new(SweepAxis::N, 2, 1, 1, 1, 1)
        };
        let samples = run_bench(&cfg).unwrap();
        assert_eq!(samples.len(), 1);
        let s = &samples[0];
        assert_eq!((s.n, s.k, s.reps), (1, 2, 1));
        assert!(s.min_ns <= s.mean_ns && s.mean_ns <= s.max_ns);
        assert_eq!(s.mean_ns, s.total_ns / u64::from(s.reps));
    }

    #[test]
    fn sweep_points_cover_both_axes() {
        let cfg = BenchConfig::new(SweepAxis::N, 200, 1, 5000, 100, 1);
        let points = cfg.points();
        assert_eq!(points.len(), 50);
        assert_eq!(points[0], (1, 200));
        assert_eq!(points[49], (4901, 200));

        let cfg = BenchConfig::new(SweepAxis::K, 300, 10, 300, 10, 1);
        let points = cfg.points();
        assert_eq!(points.len(), 30);
        assert_eq!(points[0], (300, 10));
        assert_eq!(points[29], (300, 300));
    }

    #[test]
    fn invalid_configs_are_rejected() {
        assert!(run_bench(&BenchConfig::new(SweepAxis::N, 2, 5, 1, 1, 1)).is_err());
        assert!(run_bench(&BenchConfig::new(SweepAxis::N, 2, 1, 5, 0, 1)).is_err());
        assert!(run_bench(&BenchConfig::new(SweepAxis::N, 2, 1, 5, 1, 0)).is_err());
    }

    #[test]
    fn block_guard_failure_becomes_a_failed_sample() {
        // min(n, k) is far beyond the recursion guard, so block cannot run
        let cfg = BenchConfig {
            algorithms: vec![Algorithm::Orbit, Algorithm::Block],
            warmup: 0,
            ..BenchConfig::new(SweepAxis::N, 1_200_000, 1_100_000, 1_100_000, 1, 1)
        };
        let samples = run_bench(&cfg).unwrap();
        assert_eq!(samples.len(), 2);
        assert_eq!(samples[0].algorithm, Algorithm::Orbit);
        assert!(samples[0].reps == 1 && samples[0].max_ns > 0);
        assert_eq!(samples[1].algorithm, Algorithm::Block);
        assert_eq!(samples[1].reps, 0);
        assert_eq!(samples[1].total_ns, 0);
    }

    #[test]
    fn csv_writes_header_plus_one_row_per_sample() {
        let mut empty = Vec::new();
        write_csv(&[], &mut empty).unwrap();
        assert_eq!(
            String::from_utf8(empty).unwrap(),
            "algorithm,n,k,reps,mean_ns,min_ns,max_ns,total_ns\n"
        );

        let samples = vec![
            sample(Algorithm::Orbit, 10, 100),
            sample(Algorithm::Linear, 10, 200),
            sample(Algorithm::Block, 10, 150),
        ];
        let mut out = Vec::new();
        write_csv(&samples, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.ends_with('\n'));
        assert!(text.contains("orbit,10,2,3,100,99,101,300"));
    }

    #[test]
    fn csv_round_trips() {
        let samples = vec![
            sample(Algorithm::Orbit, 1, 7),
            sample(Algorithm::Block, 901, 12345),
        ];
        let mut out = Vec::new();
        write_csv(&samples, &mut out).unwrap();
        assert_eq!(read_csv(out.as_slice()).unwrap(), samples);
    }

    #[test]
    fn csv_parser_rejects_garbage() {
        assert!(matches!(
            read_csv("nope\n".as_bytes()),
            Err(Error::CsvFormat(_))
        ));
        let bad_row = "algorithm,n,k,reps,mean_ns,min_ns,max_ns,total_ns\nortib,1,2,3,4,5,6,7\n";
        assert!(matches!(
            read_csv(bad_row.as_bytes()),
            Err(Error::CsvFormat(_))
        ));
        let short_row = "algorithm,n,k,reps,mean_ns,min_ns,max_ns,total_ns\norbit,1,2\n";
        assert!(matches!(
            read_csv(short_row.as_bytes()),
            Err(Error::CsvFormat(_))
        ));
    }

    #[test]
    fn svg_is_deterministic_and_shaped() {
        let samples = vec![
            sample(Algorithm::Orbit, 100, 50),
            sample(Algorithm::Orbit, 200, 60),
            sample(Algorithm::Linear, 100, 80),
            sample(Algorithm::Linear, 200, 160),
        ];
        let a = svg_document(&samples, SweepAxis::N).unwrap();
        let b = svg_document(&samples, SweepAxis::N).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches("<polyline").count(), 2);
        assert!(a.starts_with("<?xml version=\"1.0\""));
        assert!(a.contains("version=\"1.1\""));

        let mut out_a = Vec::new();
        render_svg(&samples, SweepAxis::N, &mut out_a).unwrap();
        assert_eq!(out_a, a.as_bytes());
    }

    #[test]
    fn svg_handles_a_single_point() {
        let doc = svg_document(&[sample(Algorithm::Orbit, 5, 42)], SweepAxis::N).unwrap();
        assert_eq!(doc.matches("<polyline").count(), 1);
        assert!(doc.contains("points=\""));
    }

    #[test]
    fn svg_rejects_empty_input() {
        assert!(matches!(
            svg_document(&[], SweepAxis::N),
            Err(Error::EmptySamples)
        ));
    }
}
