pub mod oracle;
pub mod matrix_oracle;
pub mod solver_oracle;
