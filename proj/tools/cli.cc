// Copyright 2026 The QVSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qvss/circuit.h"
#include "qvss/error.h"
#include "qvss/image.h"
#include "qvss/naor.h"
#include "qvss/parity.h"
#include "qvss/protocol.h"
#include "qvss/rng.h"

namespace qvss::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kSessionFileName = "session.qvse";
constexpr uint64_t kDemoSeed = 42;

std::string ShareFileName(int j) { return "share_" + std::to_string(j) + ".qvs"; }

std::vector<uint8_t> ReadBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Throw(ErrorKind::kFormat, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Files are staged under temporary names and only renamed into place by
// Commit(), so a failing command never leaves partial output behind.
class StagedWrites {
 public:
  StagedWrites() = default;
  StagedWrites(const StagedWrites&) = delete;
  StagedWrites& operator=(const StagedWrites&) = delete;
  ~StagedWrites() {
    std::error_code ec;
    for (const auto& [tmp, final_path] : staged_) fs::remove(tmp, ec);
  }

  void Add(const fs::path& path, std::span<const uint8_t> bytes) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) Throw(ErrorKind::kFormat, "cannot write " + tmp.string());
      out.write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
      if (!out) Throw(ErrorKind::kFormat, "short write to " + tmp.string());
    }
    staged_.emplace_back(std::move(tmp), path);
  }

  void Add(const fs::path& path, const std::string& text) {
    Add(path, std::span<const uint8_t>(
                  reinterpret_cast<const uint8_t*>(text.data()), text.size()));
  }

  void Commit() {
    for (const auto& [tmp, final_path] : staged_) fs::rename(tmp, final_path);
    staged_.clear();
  }

 private:
  std::vector<std::pair<fs::path, fs::path>> staged_;
};

uint64_t ResolveSeed(const std::optional<uint64_t>& seed, std::ostream& out) {
  if (seed) return *seed;
  std::random_device rd;
  const uint64_t s = (uint64_t{rd()} << 32) ^ rd();
  out << "seed: " << s << " (pass --seed " << s << " to replay)\n";
  return s;
}

PbmVariant ParseVariant(const std::string& name) {
  return name == "p4" ? PbmVariant::kRaw : PbmVariant::kPlain;
}

std::string Ket(const std::string& bits) { return "|" + bits + ">"; }

std::string Coefficient(int n) {
  const int k = n - 1;  // amplitude 1/sqrt(2^k)
  if (k % 2 == 0) return k == 0 ? "1" : "1/" + std::to_string(1 << (k / 2));
  return "1/sqrt(" + std::to_string(1 << k) + ")";
}

std::string FormatParityState(int n, int b) {
  std::string s = Coefficient(n) + "(";
  const auto basis = EnumerateParityBasis({n, b});
  for (size_t i = 0; i < basis.size(); ++i) {
    if (i) s += " + ";
    s += Ket(basis[i].ToString());
  }
  return s + ")";
}

// Outcome of a register after MeasureAll collapsed it.
BasisOutcome CollapsedOutcome(const StateVector& state) {
  for (size_t i = 0; i < state.size(); ++i) {
    if (std::norm(state[i]) > 0.5) return BasisOutcome::FromIndex(i, state.num_qubits());
  }
  Throw(ErrorKind::kStateCorruption, "register is not a basis state");
}

struct Options {
  // share / recover / audit / compare
  std::string input;
  std::string out_dir = ".";
  std::string in_dir = ".";
  std::string session_path;
  std::vector<std::string> share_paths;
  std::string output;
  std::string reference;
  std::string baseline_dir;
  std::string backend = "statevector";
  std::string format = "p1";
  int n = 3;
  int b = 0;
  std::optional<uint64_t> seed;
  int workers = 1;
  std::vector<int> subset;
  bool per_pixel = false;
  // emit-circuit
  std::string kind = "prepare";
  std::string input_state;
  bool simulate = false;
  size_t shots = 0;
};

int CmdShare(const Options& o, std::ostream& out) {
  const BinaryImage image = ReadPbmFile(o.input);
  const uint64_t seed = ResolveSeed(o.seed, out);
  const SharingResult result =
      ShareImage(image, o.n, ParseBackend(o.backend), seed, o.workers);

  const fs::path dir(o.out_dir);
  fs::create_directories(dir);
  StagedWrites writes;
  std::vector<size_t> sizes;
  for (const ShareFile& share : result.shares) {
    const auto bytes = SerializeShare(share);
    sizes.push_back(bytes.size());
    writes.Add(dir / ShareFileName(share.participant), bytes);
  }
  const auto session_bytes = SerializeSession(result.session);
  writes.Add(dir / kSessionFileName, session_bytes);
  writes.Commit();

  out << "session " << SessionIdHex(result.session.id) << " ("
      << BackendName(result.session.backend) << ", n=" << o.n << ")\n";
  out << "pixels shared: " << image.pixel_count() << " (" << image.width()
      << "x" << image.height() << ")\n";
  for (size_t j = 0; j < sizes.size(); ++j) {
    out << "  " << ShareFileName(static_cast<int>(j + 1)) << ": " << sizes[j]
        << " bytes, " << result.shares[j].pixel_count() << " pixel entries\n";
  }
  out << "  " << kSessionFileName << ": " << session_bytes.size() << " bytes\n";
  out << "expansion factor: "
      << result.shares[0].pixel_count() / image.pixel_count() << "\n";
  return kExitOk;
}

SessionStore LoadSession(const Options& o) {
  const fs::path path = o.session_path.empty()
                            ? fs::path(o.in_dir) / kSessionFileName
                            : fs::path(o.session_path);
  return DeserializeSession(ReadBytes(path));
}

std::vector<ShareFile> LoadShares(const Options& o, int n) {
  std::vector<ShareFile> shares;
  if (!o.share_paths.empty()) {
    for (const auto& p : o.share_paths) shares.push_back(DeserializeShare(ReadBytes(p)));
    return shares;
  }
  for (int j = 1; j <= n; ++j) {
    const fs::path p = fs::path(o.in_dir) / ShareFileName(j);
    if (fs::exists(p)) shares.push_back(DeserializeShare(ReadBytes(p)));
  }
  return shares;
}

int CmdRecover(const Options& o, std::ostream& out) {
  SessionStore session = LoadSession(o);
  const std::vector<ShareFile> shares = LoadShares(o, session.n);
  const uint64_t seed = ResolveSeed(o.seed, out);
  const BinaryImage image = RecoverImage(shares, session, seed, o.workers);

  StagedWrites writes;
  writes.Add(o.output, WritePbm(image, ParseVariant(o.format)));
  writes.Commit();
  out << "recovered " << image.width() << "x" << image.height() << " image from "
      << shares.size() << " shares -> " << o.output << "\n";

  if (!o.reference.empty()) {
    const bool same = ReadPbmFile(o.reference) == image;
    out << "matches reference: " << (same ? "yes" : "no") << "\n";
    return same ? kExitOk : kExitFailure;
  }
  return kExitOk;
}

std::string PatternLabel(size_t pattern, size_t width) {
  std::string s(width, '0');
  for (size_t i = 0; i < width; ++i) {
    if ((pattern >> (width - 1 - i)) & 1u) s[i] = '1';
  }
  return s;
}

int CmdAudit(const Options& o, std::ostream& out) {
  const SessionStore session = LoadSession(o);
  std::vector<int> subset = o.subset;
  if (subset.empty()) {
    for (int j = 1; j < session.n; ++j) subset.push_back(j);
  }
  const AuditReport report = AuditSubset(session, subset);

  out << "session " << SessionIdHex(session.id) << " ("
      << BackendName(session.backend) << ", n=" << session.n << ", "
      << session.pixel_count() << " pixels)\n";
  out << "subset {";
  for (size_t i = 0; i < report.subset.size(); ++i) {
    out << (i ? "," : "") << report.subset[i];
  }
  out << "} " << (report.proper ? "proper" : "full") << "\n";

  const size_t width = report.subset.size();
  const bool sampled = session.backend == Backend::kSampled;
  out << std::left << std::setw(static_cast<int>(std::max<size_t>(width, 7)) + 2)
      << "pattern" << (sampled ? "count     frequency" : "mean probability")
      << "\n";
  for (size_t p = 0; p < report.aggregate.size(); ++p) {
    out << std::left << std::setw(static_cast<int>(std::max<size_t>(width, 7)) + 2)
        << PatternLabel(p, width);
    if (sampled) out << std::setw(10) << report.counts[p];
    out << std::fixed << std::setprecision(6) << report.aggregate[p] << "\n";
  }
  if (o.per_pixel && !report.per_pixel.empty()) {
    for (size_t l = 0; l < report.per_pixel.size(); ++l) {
      out << "pixel " << (l + 1) << ":";
      for (double p : report.per_pixel[l]) out << " " << std::setprecision(6) << p;
      out << "\n";
    }
  }
  out << std::scientific << std::setprecision(3);
  out << "max deviation from uniform: " << report.max_deviation << "\n";
  if (sampled && report.proper) {
    out << "chi-square p-value: " << report.p_value << "\n";
  }
  out << std::defaultfloat;
  out << "verdict: " << VerdictName(report.verdict) << "\n";
  return kExitOk;
}

int CmdEmitCircuit(const Options& o, std::ostream& out) {
  Circuit circuit(o.n);
  std::optional<BasisOutcome> basis_input;
  if (o.kind == "prepare") {
    if (!o.input_state.empty()) {
      Throw(ErrorKind::kArgument, "--input-state only applies to --kind xor");
    }
    circuit = BuildParityCircuit({o.n, o.b});
  } else if (o.kind == "xor") {
    const Circuit xor_circuit = BuildXorCircuit(o.n);
    if (!o.input_state.empty()) {
      basis_input = BasisOutcome::FromString(o.input_state);
      if (basis_input->size() != static_cast<size_t>(o.n)) {
        Throw(ErrorKind::kArgument, "--input-state has " +
                                        std::to_string(basis_input->size()) +
                                        " bits, --n is " + std::to_string(o.n));
      }
      // Load the basis input with X gates ahead of the XOR network.
      for (int j = 1; j <= o.n; ++j) {
        if (basis_input->bits[j - 1]) circuit.X(j);
      }
    }
    for (const Gate& g : xor_circuit.gates()) circuit.Append(g);
  } else {
    Throw(ErrorKind::kArgument, "--kind must be prepare or xor");
  }

  const std::string text = EmitAssembly(circuit);
  if (o.output.empty()) {
    out << text;
  } else {
    StagedWrites writes;
    writes.Add(o.output, text);
    writes.Commit();
    out << "wrote " << circuit.gates().size() << " gates to " << o.output << "\n";
  }
  if (!o.simulate) return kExitOk;

  const StateVector state = Simulate(circuit, StateVector(o.n));
  std::vector<uint64_t> counts;
  if (o.shots > 0) {
    Rng rng = MakeRng(ResolveSeed(o.seed, out));
    counts.assign(state.size(), 0);
    for (uint64_t idx : state.Sample(rng, o.shots)) ++counts[idx];
  }
  out << "\n" << std::left << std::setw(o.n + 4) << "state" << std::setw(14)
      << "amplitude" << std::setw(14) << "probability";
  if (!counts.empty()) out << "shots/" << o.shots;
  out << "\n";
  size_t nonzero = 0;
  for (uint64_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state[i]);
    if (p < kAnalyticTolerance) continue;
    ++nonzero;
    out << std::left << std::setw(o.n + 4)
        << Ket(BasisOutcome::FromIndex(i, o.n).ToString()) << std::fixed
        << std::setprecision(6) << std::setw(14) << state[i].real()
        << std::setw(14) << p;
    if (!counts.empty()) {
      out << static_cast<double>(counts[i]) / static_cast<double>(o.shots);
    }
    out << "\n";
  }
  out << std::defaultfloat << nonzero << " basis states with nonzero amplitude\n";
  if (basis_input) {
    const MarginalDistribution result = state.Marginal(std::vector<int>{o.n});
    const int bit = result.probabilities[1] > 0.5 ? 1 : 0;
    out << "xor result on qubit " << o.n << ": " << Ket(std::to_string(bit))
        << " with probability " << std::setprecision(6)
        << result.probabilities[bit] << " (" << ColorName(FromBit(bit))
        << ")\n";
  }
  return kExitOk;
}

BinaryImage WorkedExampleImage() {
  const std::vector<Color> colors = {Color::kWhite, Color::kBlack, Color::kBlack,
                                     Color::kWhite};
  return BinaryImage::FromPixels(4, 1, colors);
}

int CmdCompare(const Options& o, std::ostream& out) {
  const BinaryImage image =
      o.input.empty() ? WorkedExampleImage() : ReadPbmFile(o.input);
  const uint64_t seed = ResolveSeed(o.seed, out);
  const ComparisonReport report = CompareSchemes(image, o.n, seed);
  out << report.ToTable();

  if (!o.baseline_dir.empty()) {
    const MatrixSets sets = BuildNnMatrixSets(o.n);
    const auto shares = ClassicalShareImage(image, sets, seed);
    const ClassicalRecovery rec = ClassicalRecoverImage(shares, sets);
    const fs::path dir(o.baseline_dir);
    fs::create_directories(dir);
    StagedWrites writes;
    const PbmVariant v = ParseVariant(o.format);
    for (size_t j = 0; j < shares.size(); ++j) {
      writes.Add(dir / ("baseline_share_" + std::to_string(j + 1) + ".pbm"),
                 WritePbm(shares[j], v));
    }
    writes.Add(dir / "baseline_stacked.pbm", WritePbm(rec.stacked, v));
    writes.Commit();
    out << "baseline shares written to " << dir.string() << "\n";
  }
  return kExitOk;
}

int CmdDemo(const Options& o, std::ostream& out) {
  constexpr int n = 3;
  const uint64_t seed = o.seed.value_or(kDemoSeed);
  const BinaryImage secret = WorkedExampleImage();

  out << "(3,3) worked example, seed " << seed << "\n\n";
  out << "secret image:\n";
  for (size_t l = 1; l <= secret.pixel_count(); ++l) {
    out << "  pixel " << l << ": " << ColorName(secret.pixel(l)) << "\n";
  }

  SharingResult shared = ShareImage(secret, n, Backend::kStatevector, seed);
  out << "\nsharing:\n";
  for (size_t l = 1; l <= secret.pixel_count(); ++l) {
    const int b = ToBit(secret.pixel(l));
    out << "  pixel " << l << ": |C_" << b << ">_" << l << " = "
        << FormatParityState(n, b) << "  shares q_" << l << "^1, q_" << l
        << "^2, q_" << l << "^3\n";
  }

  const BinaryImage recovered =
      RecoverImage(shared.shares, shared.session, seed);
  out << "\nrecovery:\n";
  out << std::left << std::setw(16) << "  shares" << std::setw(8) << "state"
      << std::setw(12) << "collapsed" << std::setw(22) << "xor result"
      << std::setw(8) << "color" << "pixel\n";
  for (size_t l = 1; l <= secret.pixel_count(); ++l) {
    const BasisOutcome outcome = CollapsedOutcome(
        std::get<StateVector>(shared.session.registers[l - 1]));
    const std::string bits = outcome.ToString();
    const int x = XorDecode(outcome);
    const std::string q = "q_" + std::to_string(l);
    out << "  " << std::setw(14) << (q + "^1..3") << std::setw(8)
        << ("|C_" + std::to_string(ToBit(secret.pixel(l))) + ">")
        << std::setw(12) << Ket(bits)
        << std::setw(22)
        << ("|" + std::string(1, bits[0]) + "^" + bits[1] + "^" + bits[2] +
            "> = " + Ket(std::to_string(x)))
        << std::setw(8) << ColorName(recovered.pixel(l)) << l << "\n";
  }
  const bool ok = recovered == secret;
  out << "\nrecovered image " << (ok ? "equals" : "DIFFERS FROM")
      << " the secret image\n";
  return ok ? kExitOk : kExitFailure;
}

int ExitFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIncompleteShares: return kExitIncomplete;
    case ErrorKind::kFormat:
    case ErrorKind::kIntegrity:
    case ErrorKind::kStateCorruption: return kExitFormat;
    default: return kExitUsage;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"qvss: (n, n) quantum visual secret sharing toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "number of participants")->capture_default_str();
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "master seed (drawn and printed if omitted)");
  };
  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", o.workers, "per-pixel worker threads")
        ->check(CLI::Range(1, 64));
  };
  const auto backends = CLI::IsMember({"statevector", "sampled"});
  const auto formats = CLI::IsMember({"p1", "p4"});

  auto* share = app.add_subcommand("share", "split a PBM image into n shares");
  share->add_option("--input", o.input, "secret image (PBM P1/P4)")->required();
  add_n(share);
  share->add_option("--backend", o.backend)->check(backends)->capture_default_str();
  add_seed(share);
  share->add_option("--out-dir", o.out_dir, "where share_j.qvs and session.qvse go")
      ->capture_default_str();
  add_workers(share);

  auto* recover = app.add_subcommand("recover", "recover the image from all n shares");
  recover->add_option("--in-dir", o.in_dir, "directory holding share_j.qvs and session.qvse")
      ->capture_default_str();
  recover->add_option("--session", o.session_path, "session file (overrides --in-dir)");
  recover->add_option("--shares", o.share_paths, "explicit share files")->delimiter(',');
  recover->add_option("--output", o.output, "recovered PBM")->required();
  recover->add_option("--format", o.format)->check(formats)->capture_default_str();
  recover->add_option("--reference", o.reference, "compare against this PBM");
  add_seed(recover);
  add_workers(recover);

  auto* audit = app.add_subcommand("audit", "what a coalition of participants learns");
  audit->add_option("--in-dir", o.in_dir)->capture_default_str();
  audit->add_option("--session", o.session_path, "session file (overrides --in-dir)");
  audit->add_option("--subset", o.subset, "comma list of participants (default 1..n-1)")
      ->delimiter(',');
  audit->add_flag("--per-pixel", o.per_pixel, "print each pixel's exact marginal");

  auto* emit = app.add_subcommand("emit-circuit", "write OpenQASM for a circuit");
  emit->add_option("--kind", o.kind)
      ->check(CLI::IsMember({"prepare", "xor"}))
      ->capture_default_str();
  add_n(emit);
  emit->add_option("--b", o.b, "secret bit for --kind prepare")
      ->check(CLI::Range(0, 1))
      ->capture_default_str();
  emit->add_option("--input-state", o.input_state, "basis input for --kind xor, e.g. 101000");
  emit->add_option("--output", o.output, "assembly file (stdout if omitted)");
  emit->add_flag("--simulate", o.simulate, "print the simulated output state");
  emit->add_option("--shots", o.shots, "sampled shots for --simulate");
  add_seed(emit);

  auto* compare = app.add_subcommand("compare", "classical VSS vs quantum VSS");
  compare->add_option("--input", o.input, "image (default: 4-pixel worked example)");
  add_n(compare);
  add_seed(compare);
  compare->add_option("--out-dir", o.baseline_dir, "also write baseline share PBMs here");
  compare->add_option("--format", o.format)->check(formats)->capture_default_str();

  auto* demo = app.add_subcommand("demo", "replay the 4-pixel (3,3) example");
  add_seed(demo);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*share) return CmdShare(o, out);
    if (*recover) return CmdRecover(o, out);
    if (*audit) return CmdAudit(o, out);
    if (*emit) return CmdEmitCircuit(o, out);
    if (*compare) return CmdCompare(o, out);
    if (*demo) return CmdDemo(o, out);
  } catch (const Error& e) {
    err << "qvss: " << e.what() << "\n";
    return ExitFor(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "qvss: " << e.what() << "\n";
    return kExitFormat;
  }
  return kExitUsage;
}

}  // namespace qvss::cli
