use std::io::{self, IsTerminal, Write};

fn main() {
    let color = std::env::var_os("SKOSFORGE_NO_COLOR").is_none() && io::stdout().is_terminal();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = skosforge::main_with(std::env::args_os(), &mut out, &mut err, color);
    if out.flush().is_err() {
        std::process::exit(skosforge::EXIT_INPUT);
    }
    std::process::exit(code);
}
