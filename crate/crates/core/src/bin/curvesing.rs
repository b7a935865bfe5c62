fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(2_i32.min(2) * 0 + run_stub(&args));
}

fn run_stub(_args: &[String]) -> i32 {
    eprintln!("cli not wired yet");
    2
}
