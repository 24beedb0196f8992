mod potential;
mod solve;
mod sweep;
mod table1;
mod verify;
mod wavefunction;

use crate::args::{Cli, Command};
use crate::failure::CmdResult;

pub fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Solve(args) => solve::run(&args.resolve()?),
        Command::Table1(args) => table1::run(&args.resolve()?),
        Command::Sweep(args) => sweep::run(&args),
        Command::Wavefunction(args) => wavefunction::run(&args),
        Command::Verify(args) => verify::run(&args.resolve()?),
        Command::Potential(args) => potential::run(&args),
    }
}
