/* Copyright 2026 The iontc Authors.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "iontc/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace iontc::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string bits_of(int index, int n_qubits) {
  std::string s(n_qubits, '0');
  for (int b = 0; b < n_qubits; ++b)
    if (index & (1 << (n_qubits - 1 - b))) s[b] = '1';
  return s;
}

std::string term_name(Termination t) {
  return t == Termination::TargetReached ? "target-reached" : "max-sweeps";
}

}  // namespace

RunConfig parse_run_config(std::istream& in) {
  RunConfig rc;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "qubits") rc.qubits = std::stoi(val);
      else if (key == "target") rc.target = val;
      else if (key == "init") rc.init = val;
      else if (key == "gamma") rc.opt.gamma = std::stod(val);
      else if (key == "alpha") rc.opt.alpha = std::stod(val);
      else if (key == "t_init") rc.opt.t_init = std::stod(val);
      else if (key == "cool_factor") rc.opt.cool_factor = std::stod(val);
      else if (key == "fixed_step") rc.opt.fixed_step = std::stod(val);
      else if (key == "prune_eps") rc.opt.prune_eps = std::stod(val);
      else if (key == "insert_period") rc.opt.insert_period = std::stoi(val);
      else if (key == "max_sweeps") rc.opt.max_sweeps = std::stoi(val);
      else if (key == "target_fidelity") rc.opt.target_fidelity = std::stod(val);
      else if (key == "seed") rc.opt.seed = std::stoull(val);
      else
        throw std::runtime_error("unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": bad value for '" + key + "'");
    }
  }
  if (rc.qubits < 1) throw std::runtime_error("config: qubits missing");
  if (rc.target.empty()) throw std::runtime_error("config: target missing");
  if (rc.init.empty()) throw std::runtime_error("config: init missing");
  return rc;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_run_config(in);
}

Matrix load_unitary_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  int dim = 0;
  if (!(in >> dim) || dim < 2)
    throw std::runtime_error(path + ": expected matrix dimension");
  Matrix u(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      double re, im;
      if (!(in >> re >> im))
        throw std::runtime_error(path + ": truncated matrix data");
      u(r, c) = Complex(re, im);
    }
  if (!is_unitary(u, 1e-10))
    throw std::runtime_error(path + ": matrix is not unitary");
  return u;
}

ObjectiveSpec resolve_target(const std::string& target, int qubits) {
  try {
    return target_by_name(target, qubits);
  } catch (const std::domain_error&) {
    Matrix u = load_unitary_file(target);
    if (u.rows() != dim_for(qubits))
      throw std::runtime_error(target + ": matrix dimension does not match --qubits");
    return FullUnitarySpec{u, qubits};
  }
}

int cmd_verify(const std::string& seq_path, const std::string& target,
               int qubits, double tolerance, std::ostream& out,
               std::ostream& err) {
  PulseSequence seq;
  ObjectiveSpec spec;
  try {
    seq = parse_sequence(read_file(seq_path), qubits);
    spec = resolve_target(target, qubits);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  double max = spec_max_value(spec);
  double measured;
  if (const auto* f = std::get_if<FullUnitarySpec>(&spec))
    measured = fidelity(compile(seq), f->target);
  else
    measured = value(spec, seq);
  out << fmt12(measured) << "\n";
  return measured >= max - tolerance ? kOk : kQualityMissed;
}

void write_report(std::ostream& out, const RunConfig& config,
                  const OptimizationReport& report) {
  out << "CONFIG\n";
  out << "qubits = " << config.qubits << "\n";
  out << "target = " << config.target << "\n";
  out << "init = " << config.init << "\n";
  out << "gamma = " << fmt17(config.opt.gamma) << "\n";
  out << "alpha = " << fmt17(config.opt.alpha) << "\n";
  out << "t_init = " << fmt17(config.opt.t_init) << "\n";
  out << "cool_factor = " << fmt17(config.opt.cool_factor) << "\n";
  out << "fixed_step = " << fmt17(config.opt.fixed_step) << "\n";
  out << "prune_eps = " << fmt17(config.opt.prune_eps) << "\n";
  out << "insert_period = " << config.opt.insert_period << "\n";
  out << "max_sweeps = " << config.opt.max_sweeps << "\n";
  out << "target_fidelity = " << fmt17(config.opt.target_fidelity) << "\n";
  out << "seed = " << config.opt.seed << "\n";
  out << "\nTRACE\n";
  for (const TracePoint& t : report.trace)
    out << t.sweep << " " << fmt17(t.value) << " " << fmt17(t.penalty) << "\n";
  out << "\nRESULT\n";
  out << "terminated_by = " << term_name(report.terminated_by) << "\n";
  out << "sweeps_used = " << report.sweeps_used << "\n";
  out << "pulse_count = " << report.pulse_count << "\n";
  out << "best_value = " << fmt17(report.best_value) << "\n";
  out << "sequence = " << format_sequence(report.best_sequence) << "\n";
}

int cmd_optimize(const std::string& config_path, const std::string& out_prefix,
                 std::optional<std::uint64_t> seed_override, int restarts,
                 std::ostream& out, std::ostream& err) {
  RunConfig rc;
  ObjectiveSpec spec;
  Init init;
  try {
    rc = load_run_config(config_path);
    if (seed_override) rc.opt.seed = *seed_override;
    rc.opt.validate();
    spec = resolve_target(rc.target, rc.qubits);
    if (rc.init.rfind("random:", 0) == 0)
      init = RandomInit{std::stoi(rc.init.substr(7))};
    else
      init = parse_sequence(read_file(rc.init), rc.qubits);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (restarts < 1) restarts = 1;
  std::vector<OptimizationReport> reports(restarts);
  std::vector<std::thread> workers;
  for (int r = 0; r < restarts; ++r)
    workers.emplace_back([&, r] {
      RunConfig local = rc;
      local.opt.seed = rc.opt.seed + static_cast<std::uint64_t>(r);
      reports[r] = optimize(spec, init, local.opt);
    });
  for (auto& w : workers) w.join();

  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (reports[r].best_value > reports[best].best_value) best = r;
  RunConfig used = rc;
  used.opt.seed = rc.opt.seed + static_cast<std::uint64_t>(best);

  std::ofstream report_file(out_prefix + ".report");
  write_report(report_file, used, reports[best]);
  std::ofstream seq_file(out_prefix + ".seq");
  seq_file << format_sequence(reports[best].best_sequence) << "\n";

  double norm = reports[best].best_value / spec_max_value(spec);
  out << "best_value " << fmt12(reports[best].best_value) << " ("
      << term_name(reports[best].terminated_by) << ", "
      << reports[best].pulse_count << " pulses)\n";
  return norm >= rc.opt.target_fidelity ? kOk : kQualityMissed;
}

int cmd_simulate(const std::string& seq_path, int qubits,
                 const std::string& input_state, std::ostream& out,
                 std::ostream& err) {
  const int dim = dim_for(qubits);
  PulseSequence seq;
  Vector state = Vector::Zero(dim);
  try {
    seq = parse_sequence(read_file(seq_path), qubits);
    bool bitstring = input_state.size() == static_cast<std::size_t>(qubits) &&
                     input_state.find_first_not_of("01") == std::string::npos;
    if (bitstring) {
      int idx = 0;
      for (char c : input_state) idx = idx * 2 + (c - '0');
      state(idx) = 1.0;
    } else {
      // amplitude list file: 2^N lines "re im"
      std::ifstream in(input_state);
      if (!in) throw std::runtime_error("cannot open " + input_state);
      for (int i = 0; i < dim; ++i) {
        double re, im;
        if (!(in >> re >> im))
          throw std::runtime_error(input_state + ": expected " +
                                   std::to_string(dim) + " amplitudes");
        state(i) = Complex(re, im);
      }
      if (std::abs(state.norm() - 1.0) > 1e-9)
        throw std::runtime_error(input_state + ": state is not normalized");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  Vector result = compile(seq) * state;
  for (int i = 0; i < dim; ++i)
    out << "|" << bits_of(i, qubits) << "> " << fmt12(result(i).real()) << " "
        << fmt12(result(i).imag()) << "\n";
  return kOk;
}

int cmd_targets_list(std::ostream& out) {
  for (const std::string& n : target_names()) out << n << "\n";
  return kOk;
}

int cmd_targets_show(const std::string& name, int qubits, std::ostream& out,
                     std::ostream& err) {
  ObjectiveSpec spec;
  try {
    spec = target_by_name(name, qubits);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (const auto* f = std::get_if<FullUnitarySpec>(&spec)) {
    const Matrix& u = f->target;
    for (int r = 0; r < u.rows(); ++r) {
      for (int c = 0; c < u.cols(); ++c) {
        if (c) out << "  ";
        out << fmt12(u(r, c).real()) << " " << fmt12(u(r, c).imag());
      }
      out << "\n";
    }
    return kOk;
  }
  const auto& q = std::get<QecSubspaceSpec>(spec);
  out << "subspace mapping objective\n";
  out << "data_qubits = " << q.data_qubits << "\n";
  out << "ancilla_qubits = " << q.ancilla_qubits << "\n";
  out << "code states: |000>, |111> on the data qubits\n";
  out << "ancilla init: |00>\n";
  out << "error set: I";
  for (std::size_t m = 1; m < q.error_ops.size(); ++m)
    out << ", X" << m;
  out << "\nmaximum objective = " << q.error_ops.size() << "\n";
  return kOk;
}

}  // namespace iontc::cli
