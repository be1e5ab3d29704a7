//! Running a request and rendering the answer.

use charclass::chow::format_degree_list;
use charclass::{chern_class, csm_class, segre_class, ClassReport, Error};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::request::{Command, Format, Request};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response {
    pub command: Command,
    pub n: usize,
    /// Class report (segre, chern, csm).
    pub report: Option<ClassReport>,
    /// Euler characteristic (euler, euler-complement).
    pub euler: Option<BigInt>,
    pub seed: u64,
    pub retries: usize,
    pub prime: u32,
}

pub fn run(req: &Request) -> Result<Response, Error> {
    let (report, euler, retries) = match req.command {
        Command::Segre => one(segre_class(&req.ideal, &req.policy)?),
        Command::Chern => one(chern_class(&req.ideal, &req.policy)?),
        Command::Csm => one(csm_class(&req.ideal, &req.policy)?),
        Command::Euler => {
            let r = csm_class(&req.ideal, &req.policy)?;
            (None, r.euler, r.retries)
        }
        Command::EulerComplement => {
            let second = req.second.as_ref().expect("validated request");
            let whole = csm_class(&req.ideal, &req.policy)?;
            let cut = csm_class(&req.ideal.sum(second)?, &req.policy)?;
            let chi = whole.euler.expect("csm report") - cut.euler.expect("csm report");
            (None, Some(chi), whole.retries + cut.retries)
        }
    };
    Ok(Response {
        command: req.command,
        n: req.ring.nvars() - 1,
        report,
        euler,
        seed: req.policy.seed,
        retries,
        prime: req.ring.field().modulus(),
    })
}

fn one(r: ClassReport) -> (Option<ClassReport>, Option<BigInt>, usize) {
    let (euler, retries) = (r.euler.clone(), r.retries);
    (Some(r), euler, retries)
}

fn big<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    RawValue::from_string(v.to_string()).map_err(serde::ser::Error::custom)?.serialize(s)
}

fn big_opt<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    big(v.as_ref().expect("skipped when absent"), s)
}

fn big_list<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Item<'a>(#[serde(serialize_with = "big")] &'a BigInt);
    let items: Vec<Item> = v.as_ref().expect("skipped when absent").iter().map(Item).collect();
    items.serialize(s)
}

#[derive(Serialize)]
struct Json<'a> {
    command: &'a str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "big_list")]
    degrees: Option<Vec<BigInt>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "big_opt")]
    euler: Option<BigInt>,
    seed: u64,
    retries: usize,
    prime: u32,
}

/// The stdout text for `resp`, without a trailing newline.
pub fn format_output(resp: &Response, format: Format) -> String {
    match format {
        Format::List => match &resp.report {
            Some(r) => format_degree_list(&r.degrees),
            None => resp.euler.as_ref().expect("euler response").to_string(),
        },
        Format::Poly => match &resp.report {
            Some(r) => r.chow.to_string(),
            None => resp.euler.as_ref().expect("euler response").to_string(),
        },
        Format::Json => {
            let r = resp.report.as_ref();
            let json = Json {
                command: resp.command.name(),
                n: resp.n,
                k: r.map(|r| r.k),
                d: r.and_then(|r| r.d),
                degrees: r.map(|r| r.degrees.clone()),
                poly: r.map(|r| r.chow.to_string()),
                euler: resp.euler.clone(),
                seed: resp.seed,
                retries: resp.retries,
                prime: resp.prime,
            };
            serde_json::to_string(&json).expect("plain data serializes")
        }
    }
}
