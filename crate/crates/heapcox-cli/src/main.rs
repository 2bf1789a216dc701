//! Command-line front end: constructs catalog or user-supplied heaps and
//! exposes the validators, the ideal-lattice actions, the integer and
//! string realizations, the 27-line tables and DOT export.
//!
//! Exit codes: 0 on success, 1 when a validation or verification report
//! carries failures, 2 on usage errors.

use clap::{Args, Parser, Subcommand};
use heapcox::heap::{
    catalog_heap, h3_heap, load_finite, load_motif, motif_text, search_full_heaps, FiniteHeap,
    MotifTag, PeriodicHeap, ValidationLevel,
};
use heapcox::lattice::{enumerate_height, ideal_literal, parse_ideal, Frontier};
use heapcox::realize::{
    e6_generator_perms, e6_orbit_table, hasse_graph, string_act, string_decode, string_encode,
    LabelledGraph, SignString, StringVariant, ZRealization, ZetaKind, E6_LABELS,
};
use heapcox::weyl::{
    act, equivariance_check, faithfulness_witness, reduced_words_by_action, verify_relations,
    WeylWord, Witness,
};
use heapcox::CatalogTag;
use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

/// Prints without panicking on a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        let mut stdout = std::io::stdout();
        if writeln!(stdout, $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "heapcox",
    version,
    about = "Full heaps and affine Weyl group actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct HeapSource {
    /// Catalog heap: tag and rank (A, C, A2, D, B, DSPIN, ASTR, CSTR, E6, E7, G2, H3)
    #[arg(long, num_args = 2, value_names = ["TAG", "RANK"])]
    catalog: Option<Vec<String>>,
    /// Motif file to load instead of a catalog entry
    #[arg(long)]
    motif: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the heap axioms at a given level
    Validate {
        #[command(flatten)]
        source: HeapSource,
        /// labelled, fibred or full
        #[arg(long, default_value = "full")]
        level: String,
    },
    /// Exhaustively search the full heaps over a catalog diagram
    Search {
        /// Diagram tag and rank (A, B, C, D, A2, D2, E6, E7)
        #[arg(long, num_args = 2, value_names = ["TAG", "RANK"])]
        catalog: Vec<String>,
        /// Maximum heap elements per period
        #[arg(long, default_value_t = 64)]
        budget: usize,
        /// Write the found motifs to this file (stdout otherwise)
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// List the proper ideals of one height as generator literals
    Ideals {
        #[command(flatten)]
        source: HeapSource,
        #[arg(long, default_value_t = 0)]
        height: i64,
    },
    /// Apply a word of reflections to an ideal
    Act {
        #[command(flatten)]
        source: HeapSource,
        /// Ideal literal, e.g. "2(1),5(1)"
        #[arg(long)]
        ideal: String,
        /// Comma-separated generator indices, e.g. "4" or "0,1,2,1"
        #[arg(long)]
        word: String,
    },
    /// Table of the generator action on the integer realization (TSV)
    PermZ {
        #[command(flatten)]
        source: HeapSource,
        #[arg(long)]
        gen: usize,
        #[arg(long, num_args = 2, value_names = ["ZLO", "ZHI"], default_values_t = [-20i64, 20], allow_negative_numbers = true)]
        window: Vec<i64>,
    },
    /// Sign-string encoding, decoding and actions
    Strings {
        #[command(flatten)]
        source: HeapSource,
        /// Encode a height-zero ideal literal as a string
        #[arg(long)]
        encode: Option<String>,
        /// Decode a string to its height-zero ideal
        #[arg(long)]
        decode: Option<String>,
        /// Act with one generator on --height and --string
        #[arg(long)]
        act: Option<usize>,
        #[arg(long, default_value_t = 0)]
        height: i64,
        #[arg(long)]
        string: Option<String>,
        /// List the whole string set of the variant
        #[arg(long)]
        list: bool,
    },
    /// The 27-line tables of the E6 heap
    E6 {
        /// perms, table or incidence
        what: String,
    },
    /// Edge-labelled Hasse diagram of a finite ideal lattice, as DOT
    Hasse {
        #[command(flatten)]
        source: HeapSource,
        /// Periods of the window taken from a periodic heap
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], default_values_t = [-2i64, 2], allow_negative_numbers = true)]
        window: Vec<i64>,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Verification campaigns: relations, equivariance or faithfulness
    Verify {
        /// relations, equivariance or faithfulness
        what: String,
        #[command(flatten)]
        source: HeapSource,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], default_values_t = [-2i64, 2], allow_negative_numbers = true)]
        window: Vec<i64>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
}

enum Loaded {
    Periodic(PeriodicHeap),
    Finite(FiniteHeap),
}

fn usage_err(msg: &str) -> heapcox::Error {
    heapcox::Error::Parse {
        line: 0,
        msg: msg.to_string(),
    }
}

impl HeapSource {
    fn tag(&self) -> heapcox::Result<Option<MotifTag>> {
        match &self.catalog {
            None => Ok(None),
            Some(pair) => {
                let rank: usize = pair[1]
                    .parse()
                    .map_err(|_| usage_err(&format!("bad rank `{}`", pair[1])))?;
                if pair[0].eq_ignore_ascii_case("h3") {
                    return Ok(None);
                }
                Ok(Some(MotifTag::parse(&pair[0], rank)?))
            }
        }
    }

    fn load(&self) -> heapcox::Result<Loaded> {
        match (&self.catalog, &self.motif) {
            (Some(pair), None) => {
                if pair[0].eq_ignore_ascii_case("h3") {
                    return Ok(Loaded::Finite(h3_heap()));
                }
                Ok(Loaded::Periodic(catalog_heap(self.tag()?.unwrap())?))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| usage_err(&format!("cannot read {}: {e}", path.display())))?;
                if text
                    .lines()
                    .next()
                    .is_some_and(|l| l.starts_with("heap-finite"))
                {
                    Ok(Loaded::Finite(load_finite(&text)?))
                } else {
                    Ok(Loaded::Periodic(load_motif(&text)?))
                }
            }
            _ => Err(usage_err("provide exactly one of --catalog or --motif")),
        }
    }

    fn periodic(&self) -> heapcox::Result<PeriodicHeap> {
        match self.load()? {
            Loaded::Periodic(h) => Ok(h),
            Loaded::Finite(_) => Err(usage_err("this command needs a periodic heap")),
        }
    }
}

/// Renders a labelled graph in DOT, stable under re-emission.
fn emit_dot(g: &LabelledGraph) -> String {
    let mut s = String::from("digraph ideals {\n");
    for name in &g.nodes {
        let _ = writeln!(s, "  {name};");
    }
    for &(from, to, label) in &g.edges {
        let _ = writeln!(
            s,
            "  {} -> {} [label=\"{label}\"];",
            g.nodes[from], g.nodes[to]
        );
    }
    s.push_str("}\n");
    s
}

fn write_out(out: &Option<std::path::PathBuf>, text: &str) -> heapcox::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage_err(&format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout();
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn zeta_kind(tag: MotifTag) -> heapcox::Result<(ZetaKind, usize)> {
    match tag {
        MotifTag::AChain(l) => Ok((ZetaKind::AChain, l)),
        MotifTag::CChain(l) => Ok((ZetaKind::CChain, l)),
        MotifTag::A2Chain(l) => Ok((ZetaKind::A2Chain, l)),
        MotifTag::DChain(l) => Ok((ZetaKind::DChain, l)),
        other => Err(usage_err(&format!(
            "no integer realization for {other:?}; use A, C, A2 or D"
        ))),
    }
}

fn string_variant(tag: MotifTag) -> heapcox::Result<StringVariant> {
    match tag {
        MotifTag::BSpin(l) => Ok(StringVariant::B(l)),
        MotifTag::DSpin(l) => Ok(StringVariant::D(l)),
        MotifTag::AString(l) => Ok(StringVariant::A(l)),
        MotifTag::CString(l) => Ok(StringVariant::C(l)),
        other => Err(usage_err(&format!(
            "no string variant for {other:?}; use B, DSPIN, ASTR or CSTR"
        ))),
    }
}

/// Small deterministic generator for the sampling campaigns.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self, bound: usize) -> usize {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((self.0 >> 33) as usize) % bound.max(1)
    }
}

fn run(cli: Cli) -> heapcox::Result<bool> {
    match cli.command {
        Command::Validate { source, level } => {
            let level = match level.as_str() {
                "labelled" => ValidationLevel::Labelled,
                "fibred" => ValidationLevel::Fibred,
                "full" => ValidationLevel::Full,
                other => return Err(usage_err(&format!("unknown level `{other}`"))),
            };
            let report = match source.load()? {
                Loaded::Periodic(h) => h.validate(level),
                Loaded::Finite(fh) => {
                    if level != ValidationLevel::Labelled {
                        out!("FAIL: a finite heap cannot satisfy the {level} axioms");
                        return Ok(false);
                    }
                    fh.validate_labelled()
                }
            };
            if report.passed() {
                out!("PASS: {level} axioms hold");
                Ok(true)
            } else {
                for v in &report.violations {
                    out!("FAIL: {v}");
                }
                Ok(false)
            }
        }
        Command::Search {
            catalog,
            budget,
            out,
        } => {
            let rank: usize = catalog[1]
                .parse()
                .map_err(|_| usage_err(&format!("bad rank `{}`", catalog[1])))?;
            let tag = CatalogTag::parse(&catalog[0], rank)?;
            let d = heapcox::DynkinDiagram::catalog(tag)?;
            let found = search_full_heaps(&d, budget)?;
            let mut text = String::new();
            let _ = writeln!(text, "# {} full heap class(es) over {tag}", found.len());
            for (i, h) in found.iter().enumerate() {
                let _ = writeln!(text, "# class {i}");
                text.push_str(&motif_text(
                    h,
                    &[format!("full-heap search over {tag}, class {i}")],
                ));
            }
            write_out(&out, &text)?;
            Ok(true)
        }
        Command::Ideals { source, height } => {
            let h = source.periodic()?;
            for f in enumerate_height(&h, height) {
                out!("{}", ideal_literal(&h, &f));
            }
            Ok(true)
        }
        Command::Act {
            source,
            ideal,
            word,
        } => {
            let h = source.periodic()?;
            let f = parse_ideal(&h, &ideal)?;
            if !heapcox::lattice::is_ideal(&h, &f) {
                return Err(usage_err(&format!(
                    "`{ideal}` is not an ideal of this heap"
                )));
            }
            let w = WeylWord::parse(&word, h.n())?;
            out!("{}", ideal_literal(&h, &act(&h, &w, &f)));
            Ok(true)
        }
        Command::PermZ {
            source,
            gen,
            window,
        } => {
            let tag = source
                .tag()?
                .ok_or_else(|| usage_err("perm-z needs --catalog"))?;
            let (kind, l) = zeta_kind(tag)?;
            let zr = ZRealization::new(kind, l)?;
            if gen >= zr.heap().n() {
                return Err(heapcox::Error::BadGenerator(gen));
            }
            for (z, img) in zr.perm_table(gen, window[0], window[1])? {
                out!("{z}\t{img}");
            }
            Ok(true)
        }
        Command::Strings {
            source,
            encode,
            decode,
            act,
            height,
            string,
            list,
        } => {
            let tag = source
                .tag()?
                .ok_or_else(|| usage_err("strings needs --catalog"))?;
            let v = string_variant(tag)?;
            let h = source.periodic()?;
            if let Some(lit) = encode {
                let f = parse_ideal(&h, &lit)?;
                out!("{}", string_encode(v, &h, &f)?);
                return Ok(true);
            }
            if let Some(text) = decode {
                let s = SignString::parse(v, &text)?;
                let f = string_decode(v, &h, &s)?;
                out!("{}", ideal_literal(&h, &f));
                return Ok(true);
            }
            if let Some(i) = act {
                let text = string.ok_or_else(|| usage_err("--act needs --string"))?;
                let s = SignString::parse(v, &text)?;
                let (t, out) = string_act(v, &h, i, height, &s)?;
                out!("{t} {out}");
                return Ok(true);
            }
            if list {
                for s in v.all_strings() {
                    out!("{s}");
                }
                return Ok(true);
            }
            Err(usage_err(
                "strings needs one of --encode, --decode, --act, --list",
            ))
        }
        Command::E6 { what } => {
            let h = catalog_heap(MotifTag::E6)?;
            match what.as_str() {
                "perms" => {
                    let perms = e6_generator_perms(&h)?;
                    for i in [1usize, 2, 3, 4, 5, 6, 0] {
                        out!("s_{i}: {}", heapcox::realize::perm_cycles(&perms[i]));
                    }
                }
                "table" => {
                    for (label, f) in e6_orbit_table(&h)? {
                        out!("{label}\t{}", ideal_literal(&h, &f));
                    }
                }
                "incidence" => {
                    let header: Vec<String> = E6_LABELS.iter().map(|l| l.to_string()).collect();
                    out!(".\t{}", header.join("\t"));
                    for &x in E6_LABELS.iter() {
                        let row: Vec<String> = E6_LABELS
                            .iter()
                            .map(|&y| heapcox::realize::incidence(&h, x, y).unwrap().to_string())
                            .collect();
                        out!("{x}\t{}", row.join("\t"));
                    }
                }
                other => return Err(usage_err(&format!("unknown e6 report `{other}`"))),
            }
            Ok(true)
        }
        Command::Hasse {
            source,
            window,
            out,
        } => {
            let fh = match source.load()? {
                Loaded::Finite(fh) => fh,
                Loaded::Periodic(h) => h.window(window[0], window[1]),
            };
            let g = hasse_graph(&fh);
            write_out(&out, &emit_dot(&g))?;
            Ok(true)
        }
        Command::Verify {
            what,
            source,
            window,
            samples,
            max_len,
        } => {
            let h = source.periodic()?;
            let ideals: Vec<Frontier> = (window[0]..=window[1])
                .flat_map(|t| enumerate_height(&h, t))
                .collect();
            match what.as_str() {
                "relations" => {
                    let rep = verify_relations(&h, &ideals);
                    for v in rep.violations.iter().chain(&rep.suspicious_free_pairs) {
                        out!("FAIL: {v}");
                    }
                    if rep.passed() {
                        out!("PASS: presentation verified on {} ideals", ideals.len());
                    }
                    Ok(rep.passed())
                }
                "equivariance" => {
                    let mut rng = Lcg(0x5eed);
                    let mut bad = 0usize;
                    for _ in 0..samples {
                        let len = rng.next(9);
                        let w = WeylWord((0..len).map(|_| rng.next(h.n())).collect());
                        let f = &ideals[rng.next(ideals.len())];
                        let g = &ideals[rng.next(ideals.len())];
                        if !equivariance_check(&h, &w, f, g)? {
                            out!("FAIL: word {w} breaks equivariance on ({f}, {g})");
                            bad += 1;
                        }
                    }
                    if bad == 0 {
                        out!("PASS: {samples} equivariance samples");
                    }
                    Ok(bad == 0)
                }
                "faithfulness" => {
                    let words = reduced_words_by_action(&h, max_len);
                    let mut bad = 0usize;
                    for w in &words {
                        match faithfulness_witness(&h, w)? {
                            Witness::Moved(_) => {}
                            Witness::IdentityOnWindow => {
                                out!("FAIL: word {w} acts as the identity");
                                bad += 1;
                            }
                        }
                    }
                    if bad == 0 {
                        out!(
                            "PASS: witnesses found for all {} words of length <= {max_len}",
                            words.len()
                        );
                    }
                    Ok(bad == 0)
                }
                other => Err(usage_err(&format!("unknown campaign `{other}`"))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
