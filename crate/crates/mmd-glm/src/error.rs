#[derive(Debug)]
pub struct Placeholder;
