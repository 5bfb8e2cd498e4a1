mod census;
mod count;
mod pcurv;
mod verify;

use anyhow::Result;

use crate::cli::Command;
use crate::output::Execution;

pub fn execute(command: &Command) -> Result<Execution> {
    match command {
        Command::Count(a) => count::run(a),
        Command::Census(a) => census::run(a),
        Command::Pcurv(a) => pcurv::run(a),
        Command::Verify(a) => verify::run(a),
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}
