//! Command-line front end: configuration, dispatch, JSON and table output.

use crate::acceptance::{self, CriterionReport};
use crate::canonical::CanonicalTable;
use crate::convex_order::{good_lyndon_words, lyndon_order, order_from_reduced_word, random_reduced_word, ConvexOrder};
use crate::error::{Error, Result};
use crate::klr::standard::gram_report;
use crate::klr::{KlrAlgebra, SignConvention, StandardModule};
use crate::kostant::{kostant_partitions, KostantPartition};
use crate::pbw::{dim_h, DualPbw, SeriesCharacter};
use crate::resolution::{resolution, verify_complex};
use crate::root_data::{build_root_system, CartanType, Family, RootId, RootSystem};
use crate::shuffle::{parse_word, word_to_string};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "klr", version, about = "Characters, canonical bases and KLR algebra computations")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Flags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default)]
pub struct Flags {
    /// Cartan family (A-G).
    #[arg(long = "type", global = true)]
    pub family: Option<String>,
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// `lyndon` or a reduced word for the longest element, e.g. `121`.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Primes for ranks over finite fields, comma separated.
    #[arg(long = "mod", global = true, value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// Truncation degree `D` for series.
    #[arg(long, global = true)]
    pub truncate: Option<i32>,
    /// `standard` or overrides such as `2-1=+1,3-2=-1`.
    #[arg(long, global = true)]
    pub eps: Option<String>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Also write the JSON result to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory for cached canonical tables.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// JSON file with any of the flag values; flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positive roots.
    Roots,
    /// The selected convex order, or seeded random ones.
    Orders {
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
    /// Good Lyndon words in lexicographic order.
    Lyndon,
    /// Kostant partitions of a weight.
    Kp {
        /// Weight in simple-root coordinates, e.g. `1,2,1`.
        #[arg(long)]
        weight: String,
    },
    /// Dual root vectors, or proper standard characters of one weight.
    PbwChar {
        #[arg(long)]
        weight: Option<String>,
    },
    /// Dual canonical basis characters.
    Canonical {
        /// Restrict to one weight; default is every positive root.
        #[arg(long)]
        weight: Option<String>,
    },
    /// Compares `Dim H_alpha` with the sum over Kostant partitions.
    DimCheck {
        #[arg(long)]
        weight: Option<String>,
        /// Check every weight up to this height instead.
        #[arg(long, default_value_t = 4)]
        max_height: i32,
    },
    /// Gram matrix of the contravariant form on a weight slice.
    Gram {
        /// Parts separated by `/`, each in simple-root coordinates.
        #[arg(long)]
        kp: Option<String>,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 0)]
        degree: i32,
        /// The A5 example with its printed normalization.
        #[arg(long)]
        willcex: bool,
    },
    /// Projective resolution of a multiplicity-free root module.
    Resolve {
        /// Root in simple-root coordinates; default is the highest root.
        #[arg(long)]
        root: Option<String>,
    },
    /// Runs every acceptance criterion.
    VerifyAll {
        /// Restrict to these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

/// How the convex order is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    Lyndon,
    Word(Vec<u8>),
}

/// Validated settings for one run.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub cartan: Option<CartanType>,
    pub order: OrderSpec,
    pub primes: Vec<u64>,
    pub truncate: i32,
    pub eps: Vec<(u8, u8, i64)>,
    pub seed: u64,
    pub jobs: usize,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub json: bool,
}

pub const DEFAULT_TRUNCATE: i32 = 10;

fn parse_eps(s: &str) -> Result<Vec<(u8, u8, i64)>> {
    if s.trim() == "standard" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|item| {
            let bad = || Error::Precondition(format!("bad sign override {item:?}, expected like 2-1=-1"));
            let (pair, sign) = item.split_once('=').ok_or_else(bad)?;
            let (i, j) = pair.split_once('-').ok_or_else(bad)?;
            let sign: i64 = sign.trim().parse().map_err(|_| bad())?;
            Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?, sign))
        })
        .collect()
}

fn parse_ints(s: &str) -> Result<Vec<i32>> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Precondition(format!("bad integer {t:?} in {s:?}"))))
        .collect()
}

impl JobConfig {
    /// Merges flags over an optional JSON config file and validates.
    pub fn from_flags(flags: &Flags) -> Result<Self> {
        let file: Value = match &flags.config {
            Some(p) => serde_json::from_str(&std::fs::read_to_string(p)?)?,
            None => Value::Null,
        };
        let str_of = |k: &str| file.get(k).and_then(Value::as_str).map(str::to_string);
        let int_of = |k: &str| file.get(k).and_then(Value::as_i64);
        let family = flags.family.clone().or_else(|| str_of("type"));
        let rank = flags.rank.or_else(|| int_of("rank").map(|r| r as usize));
        let cartan = match (family, rank) {
            (Some(f), Some(r)) => Some(CartanType::new(f.parse::<Family>()?, r)?),
            (None, None) => None,
            _ => return Err(Error::Precondition("--type and --rank must be given together".into())),
        };
        let order = match flags.order.clone().or_else(|| str_of("order")).as_deref() {
            None | Some("lyndon") => OrderSpec::Lyndon,
            Some(w) => OrderSpec::Word(parse_word(w)?),
        };
        let primes = if flags.primes.is_empty() {
            file.get("mod")
                .and_then(Value::as_array)
                .map(|a| a.iter().filter_map(Value::as_u64).collect())
                .unwrap_or_default()
        } else {
            flags.primes.clone()
        };
        for &p in &primes {
            if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
                return Err(Error::Precondition(format!("--mod {p} is not a prime")));
            }
        }
        let truncate = flags.truncate.or_else(|| int_of("truncate").map(|t| t as i32)).unwrap_or(DEFAULT_TRUNCATE);
        if truncate < 1 {
            return Err(Error::Precondition(format!("--truncate must be at least 1, got {truncate}")));
        }
        let eps = match flags.eps.clone().or_else(|| str_of("eps")) {
            Some(s) => parse_eps(&s)?,
            None => Vec::new(),
        };
        let jobs = flags.jobs.or_else(|| int_of("jobs").map(|j| j as usize)).unwrap_or(1);
        if jobs == 0 {
            return Err(Error::Precondition("--jobs must be at least 1".into()));
        }
        let config = Self {
            cartan,
            order,
            primes,
            truncate,
            eps,
            seed: flags.seed.or_else(|| file.get("seed").and_then(Value::as_u64)).unwrap_or(acceptance::DEFAULT_SEED),
            jobs,
            out: flags.out.clone().or_else(|| str_of("out").map(PathBuf::from)),
            cache_dir: flags.cache_dir.clone().or_else(|| str_of("cache_dir").map(PathBuf::from)),
            json: flags.json || file.get("json").and_then(Value::as_bool).unwrap_or(false),
        };
        if let Some(rs) = config.root_system().transpose()? {
            config.convex_order(&rs)?;
            config.signs(&rs)?;
        }
        Ok(config)
    }

    fn root_system(&self) -> Option<Result<RootSystem>> {
        self.cartan.map(build_root_system)
    }

    pub fn require_root_system(&self) -> Result<RootSystem> {
        self.root_system().unwrap_or_else(|| Err(Error::Precondition("this command needs --type and --rank".into())))
    }

    pub fn convex_order(&self, rs: &RootSystem) -> Result<ConvexOrder> {
        match &self.order {
            OrderSpec::Lyndon => lyndon_order(rs),
            OrderSpec::Word(w) => order_from_reduced_word(rs, w),
        }
    }

    pub fn signs(&self, rs: &RootSystem) -> Result<SignConvention> {
        let mut s = SignConvention::standard(rs);
        for &(i, j, v) in &self.eps {
            if i == 0 || j == 0 || i as usize > rs.rank() || j as usize > rs.rank() {
                return Err(Error::Precondition(format!("sign override {i}-{j} outside 1..={}", rs.rank())));
            }
            s = s.with_sign(i, j, v)?;
        }
        Ok(s)
    }

    fn echo(&self) -> Value {
        json!({
            "type": self.cartan.map(|c| c.to_string()),
            "order": match &self.order { OrderSpec::Lyndon => "lyndon".to_string(), OrderSpec::Word(w) => word_to_string(w) },
            "truncate": self.truncate,
            "seed": self.seed,
        })
    }
}

/// What a command produces: JSON, a table, and whether its checks passed.
pub struct Artifact {
    pub json: Value,
    pub table: String,
    pub ok: bool,
    pub print_json: bool,
}

fn parse_root(rs: &RootSystem, s: &str) -> Result<RootId> {
    let v = parse_ints(s)?;
    rs.root_id(&v).ok_or_else(|| Error::Precondition(format!("{s:?} is not a positive root of {}", rs.cartan_type)))
}

fn parse_weight(rs: &RootSystem, s: &str) -> Result<Vec<i32>> {
    let w = parse_ints(s)?;
    if w.len() != rs.rank() || w.iter().any(|&c| c < 0) {
        return Err(Error::WeightMismatch(format!("{s:?} is not a weight of rank {}", rs.rank())));
    }
    Ok(w)
}

fn parse_kp(rs: &RootSystem, order: &ConvexOrder, s: &str) -> Result<KostantPartition> {
    let parts = s.split('/').map(|p| parse_root(rs, p)).collect::<Result<Vec<_>>>()?;
    Ok(KostantPartition::new(order, parts))
}

fn roots_cmd(rs: &RootSystem) -> Artifact {
    let mut table = format!("{:>4}  {:<16} {:>6}  label\n", "id", "root", "height");
    let mut items = Vec::new();
    for a in 0..rs.num_positive() {
        let _ = writeln!(table, "{:>4}  {:<16} {:>6}  {}", a, format!("{:?}", rs.root(a)), rs.height(a), rs.root_label(a));
        items.push(json!({ "id": a, "root": rs.root(a), "height": rs.height(a), "label": rs.root_label(a) }));
    }
    Artifact { json: json!({ "type": rs.cartan_type.to_string(), "roots": items }), table, ok: true, print_json: false }
}

fn order_json(rs: &RootSystem, o: &ConvexOrder) -> Value {
    json!({
        "fingerprint": o.fingerprint(),
        "reduced_word": word_to_string(&o.reduced_word(rs)),
        "roots": o.roots().iter().map(|&a| rs.root(a).clone()).collect::<Vec<_>>(),
    })
}

fn order_line(rs: &RootSystem, o: &ConvexOrder) -> String {
    let labels: Vec<String> = o.roots().iter().map(|&a| rs.root_label(a)).collect();
    format!("{}: {}\n", word_to_string(&o.reduced_word(rs)), labels.join(" < "))
}

fn orders_cmd(rs: &RootSystem, cfg: &JobConfig, random: usize) -> Result<Artifact> {
    let mut orders = vec![cfg.convex_order(rs)?];
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..random {
        orders.push(order_from_reduced_word(rs, &random_reduced_word(rs, &mut rng))?);
    }
    let table = orders.iter().map(|o| order_line(rs, o)).collect();
    let json = json!({
        "type": rs.cartan_type.to_string(),
        "seed": cfg.seed,
        "orders": orders.iter().map(|o| order_json(rs, o)).collect::<Vec<_>>(),
    });
    Ok(Artifact { json, table, ok: true, print_json: false })
}

fn lyndon_cmd(rs: &RootSystem) -> Result<Artifact> {
    let mut words: Vec<String> = good_lyndon_words(rs)?.iter().map(|w| word_to_string(w)).collect();
    words.sort();
    let table = format!("{} good Lyndon words\n{}\n", words.len(), words.join(", "));
    Ok(Artifact { json: json!({ "type": rs.cartan_type.to_string(), "words": words }), table, ok: true, print_json: false })
}

fn kp_cmd(rs: &RootSystem, cfg: &JobConfig, weight: &str) -> Result<Artifact> {
    let o = cfg.convex_order(rs)?;
    let w = parse_weight(rs, weight)?;
    let kps = kostant_partitions(rs, &o, &w);
    let table = kps.iter().map(|k| format!("{}\n", k.label(rs))).collect();
    let json = json!({ "weight": w, "ordering": o.fingerprint(), "partitions": kps.iter().map(|k| k.to_json(rs)).collect::<Vec<_>>() });
    Ok(Artifact { json, table, ok: true, print_json: false })
}

fn pbw_cmd(rs: &RootSystem, cfg: &JobConfig, weight: Option<&str>) -> Result<Artifact> {
    let o = cfg.convex_order(rs)?;
    let pbw = DualPbw::new(rs, &o)?;
    let mut table = String::new();
    let mut items = Vec::new();
    match weight {
        None => {
            for &a in o.roots() {
                let ch = pbw.ch_dual_root(a);
                let _ = writeln!(table, "Ch r*_({}) = {}", rs.root_label(a), ch);
                items.push(json!({ "root": rs.root(a), "character": ch.to_json() }));
            }
        }
        Some(w) => {
            for lam in kostant_partitions(rs, &o, &parse_weight(rs, w)?) {
                let ch = pbw.ch_proper_standard(&lam);
                let _ = writeln!(table, "Ch r*_{} = {}", lam.label(rs), ch);
                items.push(json!({ "kp": lam.to_json(rs), "character": ch.to_json() }));
            }
        }
    }
    Ok(Artifact { json: json!({ "ordering": o.fingerprint(), "entries": items }), table, ok: true, print_json: false })
}

fn canonical_cmd(rs: &RootSystem, cfg: &JobConfig, weight: Option<&str>) -> Result<Artifact> {
    let o = cfg.convex_order(rs)?;
    let pbw = DualPbw::new(rs, &o)?;
    let mut table = CanonicalTable::new(&pbw);
    if let Some(dir) = &cfg.cache_dir {
        table.load(dir)?;
    }
    let weights: Vec<Vec<i32>> = match weight {
        Some(w) => vec![parse_weight(rs, w)?],
        None => o.roots().iter().map(|&a| rs.root(a).clone()).collect(),
    };
    let mut text = String::new();
    let mut items = Vec::new();
    for w in &weights {
        for (lam, ch) in table.compute_weight(w)? {
            let _ = writeln!(text, "Ch b*_{} = {}", lam.label(rs), ch);
            items.push(json!({ "kp": lam.to_json(rs), "character": ch.to_json() }));
        }
    }
    if let Some(dir) = &cfg.cache_dir {
        table.save(dir)?;
    }
    let json = json!({ "type": rs.cartan_type.to_string(), "ordering": o.fingerprint(), "entries": items });
    Ok(Artifact { json, table: text, ok: true, print_json: false })
}

fn dim_check_cmd(rs: &RootSystem, cfg: &JobConfig, weight: Option<&str>, max_height: i32) -> Result<Artifact> {
    let o = cfg.convex_order(rs)?;
    let pbw = DualPbw::new(rs, &o)?;
    let weights = match weight {
        Some(w) => vec![parse_weight(rs, w)?],
        None => acceptance::weights_up_to(rs.rank(), max_height),
    };
    let d = cfg.truncate;
    let rows = pool(cfg.jobs)?.install(|| {
        weights
            .par_iter()
            .map(|w| {
                let lhs = dim_h(rs, w, d)?;
                let rhs = pbw.sum_standard_products(w, d);
                Ok((w.clone(), lhs.agrees_up_to(&rhs, d), lhs, rhs))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut table = String::new();
    let mut items = Vec::new();
    for (w, eq, lhs, rhs) in &rows {
        let _ = writeln!(table, "{w:?}: {} | Dim H = {lhs:?}", if *eq { "ok" } else { "MISMATCH" });
        items.push(json!({ "weight": w, "equal": eq, "dim_h": lhs.to_json(), "sum": rhs.to_json() }));
    }
    let ok = rows.iter().all(|r| r.1);
    Ok(Artifact { json: json!({ "truncate": d, "checks": items, "ok": ok }), table, ok, print_json: false })
}

fn gram_cmd(
    rs: &RootSystem,
    cfg: &JobConfig,
    kp: Option<&str>,
    word: Option<&str>,
    degree: i32,
    willcex: bool,
) -> Result<Artifact> {
    let o = cfg.convex_order(rs)?;
    let mut printed_basis = None;
    let (lambda, i, matrix, slice) = if willcex {
        if rs.cartan_type != CartanType::new(Family::A, 5)? || cfg.order != OrderSpec::Lyndon {
            return Err(Error::Precondition("--willcex needs --type A --rank 5 with the Lyndon order".into()));
        }
        let data = acceptance::williamson()?;
        printed_basis = Some(data.printed_basis_gram.clone());
        let parts = crate::golden::WILLIAMSON_LAMBDA.iter().filter_map(|p| rs.root_id(p)).collect();
        let lam = KostantPartition::new(&o, parts);
        (lam, parse_word(crate::golden::WILLIAMSON_WORD)?, data.gram, data.slice_dim)
    } else {
        let (Some(kp), Some(word)) = (kp, word) else {
            return Err(Error::Precondition("gram needs --kp and --word, or --willcex".into()));
        };
        let pbw = DualPbw::new(rs, &o)?;
        let h = KlrAlgebra::with_signs(rs, cfg.signs(rs)?);
        let lam = parse_kp(rs, &o, kp)?;
        let m = StandardModule::new(&h, &pbw, &lam)?;
        let i = parse_word(word)?;
        let g = pool(cfg.jobs)?.install(|| m.gram_matrix(&i, degree))?;
        let n = m.slice_basis(&i, degree).len();
        (lam, i, g, n)
    };
    let degree = if willcex { 0 } else { degree };
    let mut json = gram_report(rs, &lambda, &i, degree, &matrix, &cfg.primes);
    let mut table = format!("lambda = {}, i = {}, degree {degree}, slice dimension {slice}\n", lambda.label(rs), word_to_string(&i));
    for row in &matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(table, "[{}]", cells.join(""));
    }
    let _ = writeln!(table, "rank over Q: {}", json["rank_char0"]);
    for p in &cfg.primes {
        let _ = writeln!(table, "rank over F{p}: {}", json["rank_mod"][p.to_string()]);
    }
    if let Some(pb) = printed_basis {
        let _ = writeln!(table, "on the printed spanning vectors:");
        for row in &pb {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            let _ = writeln!(table, "[{}]", cells.join(""));
        }
        json["printed_basis_matrix"] = json!(pb);
    }
    Ok(Artifact { json, table, ok: true, print_json: false })
}

fn resolve_cmd(rs: &RootSystem, cfg: &JobConfig, root: Option<&str>) -> Result<Artifact> {
    let o = cfg.convex_order(rs)?;
    let pbw = DualPbw::new(rs, &o)?;
    let alpha = match root {
        Some(r) => parse_root(rs, r)?,
        None => rs.highest_root(),
    };
    let c = resolution(rs, &pbw.words, alpha)?;
    let h = KlrAlgebra::with_signs(rs, cfg.signs(rs)?);
    let closed = pool(cfg.jobs)?.install(|| verify_complex(&h, &c));
    let lam = KostantPartition::new(&o, vec![alpha]);
    let euler = c.euler_character(rs, cfg.truncate);
    let euler_ok = euler == pbw.dim_standard(&lam, cfg.truncate);
    let mut json = c.to_json(rs);
    json["d_squared_zero"] = json!(closed);
    json["euler_matches_standard"] = json!(euler_ok);
    json["euler"] = series_character_json(&euler);
    let mut table = format!("resolution of Delta({}):\n", rs.root_label(alpha));
    for (d, t) in c.terms.iter().enumerate().rev() {
        let summands: Vec<String> =
            t.iter().map(|i| format!("q^{} H 1_{}", i.shift, word_to_string(&i.word))).collect();
        let _ = writeln!(table, "  P_{d} = {}", summands.join(" + "));
    }
    for (k, m) in c.differentials.iter().enumerate() {
        let _ = writeln!(table, "  d_{}:", k + 1);
        for row in m {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(table, "    [{}]", cells.join(", "));
        }
    }
    let _ = writeln!(table, "d^2 = 0: {closed}; Euler characteristic = Ch Delta to q^{}: {euler_ok}", cfg.truncate);
    Ok(Artifact { json, table, ok: closed && euler_ok, print_json: false })
}

fn series_character_json(c: &SeriesCharacter) -> Value {
    Value::Array(c.iter().map(|(w, s)| json!({ "word": word_to_string(w), "series": s.to_json() })).collect())
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))
}

fn verify_all_cmd(cfg: &JobConfig, only: &[u8]) -> Result<Artifact> {
    let ids: Vec<u8> = acceptance::CRITERIA.iter().copied().filter(|id| only.is_empty() || only.contains(id)).collect();
    let reports: Vec<CriterionReport> =
        pool(cfg.jobs)?.install(|| ids.par_iter().map(|&id| acceptance::run_criterion(id, cfg.seed)).collect());
    let table = reports.iter().map(|r| r.line() + "\n").collect();
    let ok = reports.iter().all(|r| r.passed);
    let json = json!({ "seed": cfg.seed, "criteria": reports.iter().map(CriterionReport::to_json).collect::<Vec<_>>(), "ok": ok });
    Ok(Artifact { json, table, ok, print_json: false })
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Artifact> {
    let cfg = JobConfig::from_flags(&cli.opts)?;
    let mut art = match &cli.command {
        Command::VerifyAll { only } => verify_all_cmd(&cfg, only)?,
        cmd => {
            let rs = cfg.require_root_system()?;
            match cmd {
                Command::Roots => roots_cmd(&rs),
                Command::Orders { random } => orders_cmd(&rs, &cfg, *random)?,
                Command::Lyndon => lyndon_cmd(&rs)?,
                Command::Kp { weight } => kp_cmd(&rs, &cfg, weight)?,
                Command::PbwChar { weight } => pbw_cmd(&rs, &cfg, weight.as_deref())?,
                Command::Canonical { weight } => canonical_cmd(&rs, &cfg, weight.as_deref())?,
                Command::DimCheck { weight, max_height } => dim_check_cmd(&rs, &cfg, weight.as_deref(), *max_height)?,
                Command::Gram { kp, word, degree, willcex } => {
                    gram_cmd(&rs, &cfg, kp.as_deref(), word.as_deref(), *degree, *willcex)?
                }
                Command::Resolve { root } => resolve_cmd(&rs, &cfg, root.as_deref())?,
                Command::VerifyAll { .. } => unreachable!(),
            }
        }
    };
    if let Value::Object(map) = &mut art.json {
        map.insert("config".into(), cfg.echo());
    }
    art.print_json = cfg.json;
    if let Some(path) = &cfg.out {
        std::fs::write(path, serde_json::to_string_pretty(&art.json)? + "\n")?;
    }
    Ok(art)
}

pub fn error_json(e: &Error) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}

/// Entry point: returns the process exit code (0 success, 1 failed check,
/// 2 error).
pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(art) => {
            let text = if art.print_json {
                serde_json::to_string_pretty(&art.json).unwrap_or_default() + "\n"
            } else {
                art.table
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if art.ok {
                0
            } else {
                eprintln!("{}", json!({ "error": { "kind": "check_failed", "message": "a verification check failed" } }));
                1
            }
        }
        Err(e) => {
            eprintln!("{}", error_json(&e));
            2
        }
    }
}
