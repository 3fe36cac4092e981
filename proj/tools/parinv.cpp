// parinv: generators of invariant fields of parabolic unipotent radicals.
// Stdout carries JSON lines only; diagnostics go to stderr.
// Exit codes: 0 pass, 1 check failure, 2 usage or input error.

#include "parinv/json_io.hpp"
#include "parinv/kernels.hpp"
#include "parinv/osp.hpp"
#include "parinv/verification.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace parinv;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string group;
  int n = 0;
  std::vector<int> parts;
  std::uint64_t seed = 1;
  int bound = kDefaultBound;
  std::size_t trials = 100;
  std::string out;
  std::string matrix;
  std::string variant = "group";
  bool mutate = false;
  bool timing = false;
  bool serial = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_shape_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--group", o.group, "gl | sl | o | sp")->required();
  cmd->add_option("--n", o.n, "matrix size")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--parts", o.parts, "composition of n, comma separated")->required()->delimiter(',');
  cmd->add_option("--out", o.out, "write JSON lines to this file instead of stdout");
}

void add_sampling_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "64-bit seed");
  cmd->add_option("--bound", o.bound, "integer entry bound")->check(CLI::PositiveNumber);
}

void add_trial_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--trials", o.trials, "invariance trials")->check(CLI::PositiveNumber);
}

FlagShape shape_of(const Options& o) {
  try {
    return make_shape(parse_group_kind(o.group), o.n, o.parts);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

RationalMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file " + path);
  try {
    return matrix_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed matrix file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed matrix file: ") + e.what());
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw InputError("cannot open output file " + path);
  }

  void line(const Json& j) {
    std::ostream& os = file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout;
    os << j.dump() << '\n' << std::flush;
  }

 private:
  std::ofstream file_;
};

std::string key(IndexPair p) { return p.str(); }

int cmd_describe(const Options& o) {
  const FlagShape shape = shape_of(o);
  Output out(o.out);
  if (!shape.orthosymplectic()) {
    for (const auto& d : build_generators(shape)) out.line(to_json(d));
    return kExitPass;
  }
  const auto sys = build_osp_system(shape);
  for (const auto& d : sys.j_circ) out.line(to_json(d));
  if (shape.has_center()) {
    out.line(to_json(sys.m0));
    for (const auto& d : sys.p_ratios) out.line(to_json(d));
  }
  return kExitPass;
}

int cmd_eval(const Options& o) {
  const FlagShape shape = shape_of(o);
  const RationalMatrix m = read_matrix(o.matrix);
  if (m.rows() != static_cast<std::size_t>(shape.n()) || m.cols() != m.rows())
    throw InputError("matrix size does not match --n");
  Json values = Json::object();
  Json line{{"shape", to_json(shape)}};
  if (!shape.orthosymplectic()) {
    const auto descs = build_generators(shape);
    const auto vals = eval_all(shape, m);
    for (std::size_t k = 0; k < descs.size(); ++k) values[key(*descs[k].pair)] = vals[k].str();
  } else {
    if (!in_group(shape, m)) throw InputError("matrix does not satisfy the form equation of the group");
    const auto sys = build_osp_system(shape);
    const auto vals = eval_osp(sys, m);
    for (std::size_t k = 0; k < sys.j_circ.size(); ++k) values[key(*sys.j_circ[k].pair)] = vals.j_values[k].str();
    if (shape.has_center()) {
      values["M0"] = vals.m0.str();
      for (std::size_t k = 0; k < sys.m_minors.size(); ++k) values[sys.m_minors[k].label()] = vals.m_values[k].str();
      if (vals.p_values) {
        for (std::size_t k = 0; k < sys.p_ratios.size(); ++k) values[sys.p_ratios[k].label()] = (*vals.p_values)[k].str();
      } else {
        line["ratio_error"] = RatioUndefinedError().what();
      }
    }
  }
  line["values"] = std::move(values);
  Output(o.out).line(line);
  return kExitPass;
}

int cmd_verify(const Options& o) {
  const FlagShape shape = shape_of(o);
  SuiteOptions opts;
  opts.execution = o.serial ? Execution::Serial : Execution::Parallel;
  opts.inject_mutation = o.mutate;
  opts.record_timing = o.timing;
  const auto report = run_suite(shape, o.seed, o.trials, o.bound, opts);
  Output(o.out).line(report.to_json());
  for (const auto& c : report.checks)
    if (!c.pass) std::cerr << "check failed: " << c.name << '\n';
  return report.all_pass() ? kExitPass : kExitFail;
}

int cmd_orbit_dim(const Options& o) {
  const FlagShape shape = shape_of(o);
  Json line{{"shape", to_json(shape)}};
  if (!o.matrix.empty()) {
    const RationalMatrix m = read_matrix(o.matrix);
    if (m.rows() != static_cast<std::size_t>(shape.n()) || m.cols() != m.rows())
      throw InputError("matrix size does not match --n");
    line["orbit_dimension"] = orbit_dimension(shape, m);
  } else {
    const auto check = check_orbit_and_count(shape, o.seed, o.bound, 3);
    line["orbit_dimensions"] = check.details["orbit_dimensions"];
    line["dim_unipotent_radical"] = check.details["dim_unipotent_radical"];
    line["dim_group"] = check.details["dim_group"];
    line["generators"] = check.details["generators"];
    line["dim_g0"] = check.details["dim_g0"];
    line["count_identity"] = check.pass;
  }
  Output(o.out).line(line);
  return kExitPass;
}

int cmd_sample(const Options& o) {
  const FlagShape shape = shape_of(o);
  const Seed seed{o.seed, 0};
  Json line{{"shape", to_json(shape)}, {"seed", o.seed}, {"variant", o.variant}};
  if (o.variant == "group") {
    line["matrix"] = to_json(sample_group_point(shape, seed, o.bound).matrix());
  } else if (o.variant == "unipotent") {
    line["matrix"] = to_json(sample_unipotent_radical(shape, seed, o.bound).matrix());
  } else {
    SliceVariant v;
    if (o.variant == "s") {
      v = SliceVariant::S;
    } else if (o.variant == "s0") {
      v = SliceVariant::S0;
    } else if (o.variant == "scirc") {
      v = SliceVariant::SCirc;
    } else {
      throw InputError("unknown variant " + o.variant);
    }
    const auto sp = sample_slice(shape, seed, o.bound, v);
    line["matrix"] = to_json(sp.point.matrix());
    if (v == SliceVariant::SCirc) line["resolved_sign"] = sp.resolved_sign;
  }
  Output(o.out).line(line);
  return kExitPass;
}

int cmd_selftest(const Options& o) {
  const std::vector<FlagShape> shapes{
      make_shape(GroupKind::GL, 5, {1, 2, 2}), make_shape(GroupKind::GL, 4, {2, 2}),
      make_shape(GroupKind::SL, 4, {1, 3}),    make_shape(GroupKind::O, 5, {1, 3, 1}),
      make_shape(GroupKind::O, 6, {2, 2, 2}),  make_shape(GroupKind::SP, 4, {1, 2, 1}),
  };
  Output out(o.out);
  bool all = true;
  for (const auto& shape : shapes) {
    const auto report = run_suite(shape, o.seed, 20, o.bound);
    Json failed = Json::array();
    for (const auto& c : report.checks)
      if (!c.pass) failed.push_back(c.name);
    all = all && report.all_pass();
    out.line(Json{{"shape", to_json(shape)}, {"pass", report.all_pass()}, {"failed_checks", failed}});
  }
  return all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();
  CLI::App app{"Generators of invariant fields for unipotent radicals of parabolic subgroups"};
  app.require_subcommand(1);
  Options o;

  auto* describe = app.add_subcommand("describe", "print generator descriptors as JSON lines");
  add_shape_flags(describe, o);

  auto* eval = app.add_subcommand("eval", "evaluate every generator at a matrix");
  add_shape_flags(eval, o);
  eval->add_option("--matrix", o.matrix, "JSON matrix file")->required();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_shape_flags(verify, o);
  add_sampling_flags(verify, o);
  add_trial_flags(verify, o);
  verify->add_flag("--mutate", o.mutate, "debug: add a mutated generator to the invariance check");
  verify->add_flag("--timing", o.timing, "record wall-clock duration in the report");
  verify->add_flag("--serial", o.serial, "use the serial reference kernels");

  auto* orbit = app.add_subcommand("orbit-dim", "orbit dimension of the radical at sampled points or a given matrix");
  add_shape_flags(orbit, o);
  add_sampling_flags(orbit, o);
  orbit->add_option("--matrix", o.matrix, "JSON matrix file");

  auto* sample = app.add_subcommand("sample", "draw a seeded matrix");
  add_shape_flags(sample, o);
  add_sampling_flags(sample, o);
  sample->add_option("--variant", o.variant, "group | unipotent | s | s0 | scirc");

  auto* selftest = app.add_subcommand("selftest", "run the suite over a fixed set of small shapes");
  add_sampling_flags(selftest, o);
  selftest->add_option("--out", o.out, "write JSON lines to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*describe) return cmd_describe(o);
    if (*eval) return cmd_eval(o);
    if (*verify) return cmd_verify(o);
    if (*orbit) return cmd_orbit_dim(o);
    if (*sample) return cmd_sample(o);
    if (*selftest) return cmd_selftest(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
