//! Command-line dispatch. Placeholder while the library grows.

pub fn run() -> i32 {
    eprintln!("not yet wired");
    3
}
