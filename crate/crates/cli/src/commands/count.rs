use anyhow::Result;
use dormancy::count::{enumerate_chains, n_gen_chain, n_gen_recursive, Profile};
use dormancy::Count;
use serde::Serialize;

use super::join;
use crate::cli::{CountArgs, Method};
use crate::output::{
    csv_string, json_string, Check, Execution, Provenance, VerificationReport, EXIT_OK,
};

#[derive(Serialize)]
struct CountRecord {
    p: u32,
    profile: String,
    degree: u64,
    method: &'static str,
    count: String,
}

#[derive(Serialize)]
struct CountDocument {
    p: u32,
    profile: Vec<u32>,
    degree: u64,
    counts: Vec<MethodCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chains: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<VerificationReport>,
}

#[derive(Serialize)]
struct MethodCount {
    method: &'static str,
    count: String,
}

pub fn run(args: &CountArgs) -> Result<Execution> {
    let profile = Profile::new(args.p, args.profile.clone())?;
    let methods: Vec<&'static str> = match args.method {
        Method::Recursive => vec!["recursive"],
        Method::ChainDp => vec!["chain-dp"],
        Method::ChainEnum => vec!["chain-enum"],
        Method::All => vec!["recursive", "chain-dp", "chain-enum"],
    };
    let need_chains = args.chains || methods.contains(&"chain-enum");
    let chains = need_chains.then(|| enumerate_chains(&profile));
    let counts: Vec<MethodCount> = methods
        .iter()
        .map(|&m| {
            let c: Count = match m {
                "recursive" => n_gen_recursive(&profile),
                "chain-dp" => n_gen_chain(&profile),
                _ => Count::from(chains.as_ref().expect("enumerated").len()),
            };
            MethodCount {
                method: m,
                count: c.to_string(),
            }
        })
        .collect();

    let report = (counts.len() > 1).then(|| {
        let reference = &counts[0].count;
        let checks = counts[1..]
            .iter()
            .map(|mc| {
                Check::compare(
                    format!("{profile} {} = recursive", mc.method),
                    reference,
                    &mc.count,
                    Provenance::Oracle,
                )
            })
            .collect();
        VerificationReport::new("count", checks)
    });

    let mut stdout = format!(
        "p = {}, profile {profile}, degree {}\n",
        args.p,
        profile.degree()
    );
    for mc in &counts {
        stdout += &format!("{:<11} {}\n", mc.method, mc.count);
    }
    if args.chains {
        for c in chains.as_deref().unwrap_or_default() {
            stdout += &format!("chain {}\n", join(c.sequence(), ","));
        }
    }
    let code = report.as_ref().map_or(EXIT_OK, |r| r.exit_code());
    if let Some(r) = report.as_ref().filter(|r| r.failed > 0) {
        stdout += &r.render();
    }

    let records: Vec<CountRecord> = counts
        .iter()
        .map(|mc| CountRecord {
            p: args.p,
            profile: join(profile.indices(), ","),
            degree: profile.degree(),
            method: mc.method,
            count: mc.count.clone(),
        })
        .collect();
    let doc = CountDocument {
        p: args.p,
        profile: profile.indices().to_vec(),
        degree: profile.degree(),
        counts,
        chains: if args.chains {
            chains.map(|cs| cs.iter().map(|c| c.sequence().to_vec()).collect())
        } else {
            None
        },
        report,
    };
    Ok(Execution {
        stdout,
        files: vec![
            ("count.csv".into(), csv_string(&records)?),
            ("count.json".into(), json_string(&doc)?),
        ],
        code,
    })
}
