//! Weil descent and reparametrization.
