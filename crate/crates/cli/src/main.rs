mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hopfq_core::dual::{dual_axiom_suite, DualContext, DEFAULT_SEED};
use hopfq_core::hopf::{export_structure, verify_axioms, HopfQuasigroup, StructureKind};
use hopfq_core::integrals::{
    compose_antipode, faithful_left_integral, integral_space, is_faithful, modular_data, verify_invariance_identities,
    Side,
};
use hopfq_core::loops::{
    export_table, free_group, integers, search_ip_loops, EnumerableQuasigroup, LoopFilter, LoopProperty,
    DEFAULT_SEARCH_BOUND,
};
use hopfq_core::mcq::{export_mcq, function_algebra, prop_bridges, verify_multiplier_axioms, DEFAULT_WINDOW};
use hopfq_core::suite::{closed_form_report, run_suite, variety_report, RunConfig};
use hopfq_core::{Field, Report};

use input::Input;

#[derive(Parser)]
#[command(
    name = "hopfq",
    version,
    about = "Exact checks for Hopf quasigroups, integrals and integral duals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// `rational` or `gf:p`.
    #[arg(long, global = true)]
    field: Option<Field>,
    #[arg(long, global = true, default_value_t = DEFAULT_WINDOW)]
    window: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the exported structure here instead of stdout.
    #[arg(long, global = true)]
    export: Option<PathBuf>,
    /// Also list passing entries.
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Loop laws and Hopf quasigroup axioms of `kQ`.
    Verify { input: String },
    /// Integrals, faithfulness, invariance identities and modular data.
    Integrals { input: String },
    /// The integral dual and its axiom suite.
    Dual { input: String },
    /// `k(G)` as a multiplier Hopf coquasigroup on a window.
    Mcq { input: String },
    /// Structure constants or T-map tables.
    Export {
        input: String,
        #[arg(long, value_enum, default_value = "algebra")]
        what: What,
    },
    /// Everything, over the built-in corpus.
    #[command(name = "full-suite", alias = "paper-suite")]
    FullSuite {
        /// Replace the antipodes of the finite corpus by the identity.
        #[arg(long)]
        corrupt_antipode: bool,
    },
    /// IP loops of a given order, one per isomorphism class.
    Search {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        require: Vec<LoopProperty>,
        #[arg(long)]
        forbid: Vec<LoopProperty>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Algebra,
    Dual,
    Mcq,
}

struct Run<'a> {
    cli: &'a Cli,
    out: String,
}

impl Run<'_> {
    fn field(&self) -> Field {
        self.cli.field.unwrap_or(Field::Rational)
    }

    fn report(&mut self, r: &Report) -> bool {
        self.out.push_str(&r.render(self.cli.verbose));
        r.passed()
    }

    fn emit(&mut self, text: String) -> Result<()> {
        match &self.cli.export {
            Some(path) => {
                fs::write(path, text).with_context(|| format!("cannot write `{}`", path.display()))?;
                self.out.push_str(&format!("wrote {}\n", path.display()));
            }
            None => self.out.push_str(&text),
        }
        Ok(())
    }
}

fn loop_properties<Q: EnumerableQuasigroup>(q: &Q, window: &[Q::Elem]) -> Report {
    let mut r = Report::new(format!("{} laws", q.name()));
    for p in LoopProperty::ALL {
        let o = q.check_on(window, p);
        let w = o
            .witness
            .map(|t| format!("({})", t.iter().map(|x| q.encode(x)).collect::<Vec<_>>().join(", ")));
        r.observe(p.name(), o.holds, w);
    }
    r
}

fn mcq_report<Q: EnumerableQuasigroup>(run: &mut Run, q: &Q) -> Result<bool> {
    let (field, n, seed) = (run.field(), run.cli.window, run.cli.seed);
    let k = function_algebra(q, field, n)?;
    let mut r = verify_multiplier_axioms(&k, n, seed);
    r.absorb("", variety_report(&k, n));
    r.absorb("", prop_bridges(&k, n));
    Ok(run.report(&r))
}

fn mcq_export<Q: EnumerableQuasigroup>(run: &mut Run, q: &Q) -> Result<()> {
    let k = function_algebra(q, run.field(), run.cli.window)?;
    run.emit(export_mcq(&k, run.cli.window))
}

fn verify(run: &mut Run, input: &Input) -> Result<bool> {
    let n = run.cli.window;
    match input {
        Input::Loop(q) => {
            let all: Vec<usize> = q.elements().collect();
            let laws = loop_properties(q, &all);
            run.out.push_str(&laws.render(true));
        }
        Input::Integers => {
            let r = loop_properties(&integers(), &integers().window(n));
            run.out.push_str(&r.render(true));
            return mcq_report(run, &integers());
        }
        Input::Free(rank) => {
            let g = free_group(*rank);
            let r = loop_properties(&g, &g.window(n));
            run.out.push_str(&r.render(true));
            return mcq_report(run, &g);
        }
        Input::Sweedler => {}
    }
    let h = input.algebra(run.field())?;
    Ok(run.report(&verify_axioms(&HopfQuasigroup::new(h))))
}

fn integrals(run: &mut Run, input: &Input) -> Result<bool> {
    let h = input.algebra(run.field())?;
    let mut r = Report::new("integrals");
    for side in [Side::Left, Side::Right] {
        r.observe(
            format!("{side} integral space dimension {}", integral_space(&h, side).len()),
            true,
            None,
        );
    }
    let phi = match faithful_left_integral(&h) {
        Ok(phi) => phi,
        Err(e) => {
            r.require("faithful left integral exists", false, Some(e.to_string()));
            return Ok(run.report(&r));
        }
    };
    let values: Vec<String> = (0..h.dim())
        .map(|i| format!("{}={}", h.label(i), phi.coeffs[i]))
        .collect();
    r.observe(format!("φ: {}", values.join(" ")), true, None);
    let faith = is_faithful(&h, &phi.coeffs);
    r.require(
        "φ faithful",
        faith.faithful,
        Some(format!("Gram rank {}", faith.gram_rank)),
    );
    r.absorb(
        "",
        verify_invariance_identities(&h, &phi.coeffs, &compose_antipode(&h, &phi.coeffs))?,
    );
    match modular_data(&h, &phi.coeffs) {
        Ok(m) => {
            let delta: Vec<String> = m.delta.iter().map(|(i, c)| format!("{c}·{}", h.label(i))).collect();
            r.require("modular data consistent", true, None);
            r.observe(format!("δ = {}, τ = {}", delta.join(" + "), m.tau), true, None);
        }
        Err(e) => r.require("modular data consistent", false, Some(e.to_string())),
    }
    Ok(run.report(&r))
}

fn dual(run: &mut Run, input: &Input) -> Result<bool> {
    let h = input.algebra(run.field())?;
    let ctx = DualContext::from_algebra(&h)?;
    let mut r = dual_axiom_suite(&ctx, run.cli.seed);
    if let Input::Loop(q) = input {
        r.absorb("", closed_form_report(q, &ctx));
    }
    let passed = run.report(&r);
    if run.cli.export.is_some() {
        let assoc = ctx.dual_structure().associativity_witness().is_none();
        let props = [("associative".to_string(), assoc.to_string())];
        run.emit(export_structure(
            ctx.dual_structure(),
            StructureKind::HopfCoquasigroup,
            &props,
        ))?;
    }
    Ok(passed)
}

fn export(run: &mut Run, input: &Input, what: What) -> Result<bool> {
    match (what, input) {
        (What::Mcq, Input::Loop(q)) => mcq_export(run, q)?,
        (What::Mcq, Input::Integers) => mcq_export(run, &integers())?,
        (What::Mcq, Input::Free(rank)) => mcq_export(run, &free_group(*rank))?,
        (What::Mcq, Input::Sweedler) => bail!("`mcq` export needs a loop or group"),
        (What::Algebra, _) => {
            let h = input.algebra(run.field())?;
            let assoc = h.associativity_witness().is_none();
            let props = [("associative".to_string(), assoc.to_string())];
            run.emit(export_structure(&h, StructureKind::HopfQuasigroup, &props))?
        }
        (What::Dual, _) => {
            let h = input.algebra(run.field())?;
            let ctx = DualContext::from_algebra(&h)?;
            let assoc = ctx.dual_structure().associativity_witness().is_none();
            let props = [("associative".to_string(), assoc.to_string())];
            run.emit(export_structure(
                ctx.dual_structure(),
                StructureKind::HopfCoquasigroup,
                &props,
            ))?
        }
    }
    Ok(true)
}

fn full_suite(run: &mut Run, corrupt_antipode: bool) -> Result<bool> {
    let cfg = RunConfig {
        fields: match run.cli.field {
            Some(f) => vec![f],
            None => RunConfig::default().fields,
        },
        window: run.cli.window,
        seed: run.cli.seed,
        verbose: run.cli.verbose,
        corrupt_antipode,
    };
    let mut all = true;
    let mut totals = (0, 0);
    for r in run_suite(&cfg)? {
        totals.0 += r.entries.len();
        totals.1 += r.failures().count();
        all &= run.report(&r);
    }
    run.out.push_str(&format!(
        "== total ==\nentries={}\nfailed={}\nstatus={}\n",
        totals.0,
        totals.1,
        if all { "pass" } else { "fail" }
    ));
    Ok(all)
}

fn search(run: &mut Run, order: usize, require: &[LoopProperty], forbid: &[LoopProperty]) -> Result<bool> {
    let mut filter = LoopFilter::any();
    for &p in require {
        filter = filter.require(p);
    }
    for &p in forbid {
        filter = filter.forbid(p);
    }
    let found = search_ip_loops(order, &filter, DEFAULT_SEARCH_BOUND)?;
    for q in &found {
        run.out.push_str(&export_table(q));
        run.out.push('\n');
    }
    run.out.push_str(&format!("--\norder={order}\nfound={}\n", found.len()));
    Ok(true)
}

fn execute(run: &mut Run) -> Result<bool> {
    let cli = run.cli;
    let input_name = match &cli.command {
        Command::Verify { input }
        | Command::Integrals { input }
        | Command::Dual { input }
        | Command::Mcq { input }
        | Command::Export { input, .. } => input.as_str(),
        Command::FullSuite { .. } => "builtin corpus",
        Command::Search { .. } => "search",
    };
    let field = cli.field.map_or("default".to_string(), |f| f.to_string());
    run.out.push_str(&format!(
        "# input={input_name} field={field} window={} seed={}\n",
        cli.window, cli.seed
    ));
    match &cli.command {
        Command::FullSuite { corrupt_antipode } => return full_suite(run, *corrupt_antipode),
        Command::Search { order, require, forbid } => return search(run, *order, require, forbid),
        _ => {}
    }
    let input = Input::parse(input_name)?;
    if let (Input::Loop(q), Some(f)) = (&input, cli.field) {
        if !f.admits_order(q.order()) {
            bail!(
                "field {f} is too small for a loop of order {}: need p > {}",
                q.order(),
                q.order()
            );
        }
    }
    match &cli.command {
        Command::Verify { .. } => verify(run, &input),
        Command::Integrals { .. } => integrals(run, &input),
        Command::Dual { .. } => dual(run, &input),
        Command::Mcq { .. } => match &input {
            Input::Loop(q) => mcq_report(run, q),
            Input::Integers => mcq_report(run, &integers()),
            Input::Free(rank) => mcq_report(run, &free_group(*rank)),
            Input::Sweedler => bail!("`mcq` needs a loop or group"),
        },
        Command::Export { what, .. } => export(run, &input, *what),
        Command::FullSuite { .. } | Command::Search { .. } => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut run = Run {
        cli: &cli,
        out: String::new(),
    };
    let result = execute(&mut run);
    print!("{}", run.out);
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
