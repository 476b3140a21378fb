// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    std::process::exit(qcbench_cli::run(std::env::args_os()));
}
