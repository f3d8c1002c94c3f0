// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "streamctc/ctc.h"
#include "streamctc/ctc_beam.h"
#include "streamctc/emission_io.h"
#include "streamctc/emission_sim.h"
#include "streamctc/error.h"
#include "streamctc/metrics.h"
#include "streamctc/ngram_lm.h"
#include "streamctc/online_decoder.h"
#include "streamctc/seq2seq_beam.h"
#include "streamctc/text_format.h"
#include "streamctc/version.h"

namespace streamctc::cli {
namespace {

using Json = nlohmann::ordered_json;

// Bad flag combination detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct DecodeFlags {
  int width = 100;
  double alpha = 0.5;
  double beta = 0.1;
  std::string lm_path;
};

void AddDecodeFlags(CLI::App* cmd, DecodeFlags& flags) {
  cmd->add_option("--beam-width", flags.width, "Beam width W")
      ->capture_default_str();
  cmd->add_option("--alpha", flags.alpha, "LM weight")->capture_default_str();
  cmd->add_option("--beta", flags.beta, "Length normalization exponent")
      ->capture_default_str();
  cmd->add_option("--lm", flags.lm_path, "NGLM v1 language model")
      ->check(CLI::ExistingFile);
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Fn>
void WriteOutput(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write(out);
  if (!out.flush()) throw Error("failed writing " + path);
}

class Logger {
 public:
  Logger(const Io& io) : err_(io.err), enabled_(io.log) {}
  template <typename... Args>
  void operator()(const Args&... args) const {
    if (!enabled_) return;
    err_ << "[streamctc] ";
    (err_ << ... << args);
    err_ << '\n';
  }

 private:
  std::ostream& err_;
  bool enabled_;
};

// Loads the LM named by `path`, or a uniform LM when fusion is off.
std::unique_ptr<CharLm> LoadLm(const std::string& path, const std::string& visible,
                               double alpha, const Logger& log) {
  if (path.empty()) {
    if (alpha > 0.0) {
      throw UsageError("--alpha > 0 requires --lm (or pass --alpha 0)");
    }
    return std::make_unique<UniformLm>(visible);
  }
  auto in = OpenInput(path);
  auto lm = std::make_unique<NgramLm>(LoadNgramLm(in));
  log("loaded ", path, ": order ", lm->order(), ", ", lm->visible().size(),
      " characters");
  return lm;
}

EmissionMatrix LoadEmissionFile(const std::string& path) {
  auto in = OpenInput(path);
  return LoadEmissions(in);
}

BeamConfig MakeBeamConfig(const DecodeFlags& flags) {
  BeamConfig config;
  config.width = flags.width;
  config.alpha = flags.alpha;
  config.beta = flags.beta;
  config.Validate();
  return config;
}

// ---------------------------------------------------------------- decode

struct DecodeArgs {
  std::string em_path;
  DecodeFlags flags;
  bool greedy = false;
};

int CmdDecode(const DecodeArgs& args, const Io& io) {
  const Logger log(io);
  const EmissionMatrix em = LoadEmissionFile(args.em_path);
  log("decode: T=", em.num_frames(), " symbols=", em.num_symbols());
  if (args.greedy) {
    std::vector<int> path;
    for (int t = 0; t < em.num_frames(); ++t) {
      const auto row = em.row(t);
      path.push_back(static_cast<int>(
          std::max_element(row.begin(), row.end()) - row.begin()));
    }
    io.out << GreedyDecode(em) << '\n'
           << "score\t" << FormatDouble(PathLogProbability(path, em)) << '\n';
    return kExitOk;
  }
  const BeamConfig config = MakeBeamConfig(args.flags);
  const auto lm = LoadLm(args.flags.lm_path, em.alphabet().visible(),
                         config.alpha, log);
  const CtcPrefixBeamSearch search(em.alphabet(), config, *lm);
  const DecodeResult result = search.Decode(em);
  io.out << result.text << '\n' << "score\t" << FormatDouble(result.score) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- stream

struct StreamArgs {
  DecodeFlags flags;
  int lag = 22;
  int start_frame = 1;
};

void EmitRecord(const Json& record, const Io& io) {
  io.out << record.dump() << '\n';
  io.out.flush();
}

int CmdStream(const StreamArgs& args, const Io& io) {
  const Logger log(io);
  if (args.lag < 0) throw UsageError("--lag must be >= 0");
  if (args.start_frame < 1) throw UsageError("--start-frame must be >= 1");
  const BeamConfig config = MakeBeamConfig(args.flags);

  LineReader reader(io.in);
  std::string line;
  std::optional<int> declared;
  std::unique_ptr<CharLm> lm;
  std::optional<CtcPrefixBeamSearch> search;
  std::optional<OnlineDecoder> decoder;
  int frame = 0;
  try {
    if (!reader.Next(line)) throw ParseError("missing CTCEM header", 1);
    EmissionHeader header = ParseEmissionHeader(line, reader.line());
    declared = header.num_frames;
    lm = LoadLm(args.flags.lm_path, header.alphabet.visible(), config.alpha, log);
    search.emplace(header.alphabet, config, *lm);
    decoder.emplace(*search, args.lag,
                    args.flags.lm_path.empty() ? 0 : kMaxCompletionChars);
    log("stream: lag=", args.lag, " width=", config.width, " alpha=", config.alpha);

    const int width = header.alphabet.size();
    const auto started = std::chrono::steady_clock::now();
    while (reader.Next(line)) {
      if (line.empty()) continue;
      ++frame;
      if (declared && frame > *declared) {
        throw ParseError("header declares " + std::to_string(*declared) +
                             " frames, found more",
                         reader.line());
      }
      const auto row = ParseEmissionRow(line, width, reader.line());
      if (frame < args.start_frame) continue;
      const IncrementalOutput output = decoder->Push(row);
      Json record;
      record["frame"] = frame;
      record["committed"] = output.committed;
      record["hypothesis"] = output.hypothesis;
      record["completion"] = output.completion;
      record["score"] = output.score;
      EmitRecord(record, io);
    }
    if (declared && frame != *declared) {
      throw ParseError("header declares " + std::to_string(*declared) +
                           " frames, found " + std::to_string(frame),
                       reader.line());
    }
    const DecodeResult result = decoder->Flush();
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - started;
    log("stream: ", frame, " frames in ", elapsed.count(), " ms");
    Json final_record;
    final_record["final"] = result.text;
    final_record["score"] = result.score;
    EmitRecord(final_record, io);
    return kExitOk;
  } catch (const ParseError& e) {
    EmitRecord(Json{{"error", e.what()}, {"line", e.line()}}, io);
    throw;
  } catch (const ValidationError& e) {
    EmitRecord(Json{{"error", e.what()}, {"line", reader.line()}}, io);
    throw;
  }
}

// ---------------------------------------------------------------- lm-train

struct LmTrainArgs {
  std::string corpus_path;
  std::string out_path;
  std::string alphabet = Alphabet::Default().visible();
  int order = 3;
  double k = 1.0;
};

int CmdLmTrain(const LmTrainArgs& args, const Io& io) {
  const Logger log(io);
  const Alphabet alphabet(args.alphabet);
  auto corpus = OpenInput(args.corpus_path);
  const NgramLm lm = TrainNgramLm(corpus, alphabet, args.order, args.k);
  log("lm-train: order ", args.order, ", k=", args.k);
  WriteOutput(args.out_path, io.out,
              [&](std::ostream& out) { SaveNgramLm(lm, out); });
  return kExitOk;
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
  std::string pairs_path;
  bool confusion = false;
};

int CmdMetrics(const MetricsArgs& args, const Io& io) {
  auto in = OpenInput(args.pairs_path);
  LineReader reader(in);
  std::string line;
  ErrorTally words;
  ErrorTally chars;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t skipped = 0;
  while (reader.Next(line)) {
    if (line.empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw ParseError("expected <reference> TAB <hypothesis>", reader.line());
    }
    const std::string ref(fields[0]);
    const std::string hyp(fields[1]);
    const auto ref_words = WordTokens(ref);
    if (ref_words.empty()) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": empty reference");
    }
    const auto hyp_words = WordTokens(hyp);
    if (hyp_words.empty()) {
      ++skipped;
      continue;
    }
    words.Add(AlignEdits<std::string>(ref_words, hyp_words).distance,
              ref_words.size());
    chars.Add(CharEditDistance(ref, hyp), ref.size());
    pairs.emplace_back(ref, hyp);
  }
  io.out << "pairs\t" << pairs.size() << '\n'
         << "skipped_empty_hypothesis\t" << skipped << '\n';
  if (pairs.empty()) return kExitOk;
  io.out << "WER\t" << FormatDouble(words.rate()) << '\n'
         << "CER\t" << FormatDouble(chars.rate()) << '\n';
  if (args.confusion) {
    const Alphabet alphabet = Alphabet::Default();
    const ConfusionMatrix matrix = BuildConfusionMatrix(pairs, alphabet);
    for (char r : alphabet.visible()) {
      for (char h : alphabet.visible()) {
        if (matrix.count(r, h) == 0.0) continue;
        io.out << "confusion\t" << r << '\t' << h << '\t'
               << FormatDouble(matrix.count(r, h)) << '\t'
               << FormatDouble(matrix.normalized(r, h)) << '\n';
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string em_path;
  int top = 10;
};

int CmdOracle(const OracleArgs& args, const Io& io) {
  const EmissionMatrix em = LoadEmissionFile(args.em_path);
  const auto distribution = TranscriptDistribution(em);
  std::vector<std::pair<Transcript, double>> ranked(distribution.begin(),
                                                    distribution.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const auto n = std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(std::max(args.top, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    io.out << '"' << ranked[i].first << "\"\t" << FormatDouble(ranked[i].second)
           << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string text;
  std::string out_path;
  std::string alphabet = Alphabet::Default().visible();
  SimConfig config;
  bool no_blank_fill = false;
};

int CmdSimulate(SimulateArgs args, const Io& io) {
  const Alphabet alphabet(args.alphabet);
  args.config.blank_fill = !args.no_blank_fill;
  const EmissionMatrix em = Simulate(args.text, alphabet, args.config);
  WriteOutput(args.out_path, io.out,
              [&](std::ostream& out) { SaveEmissions(em, out); });
  return kExitOk;
}

// ---------------------------------------------------------------- rf

struct RfArgs {
  std::vector<int> widths;
  int layers = 0;
  int width = 5;
};

int CmdRf(const RfArgs& args, const Io& io) {
  ReceptiveFieldSpec spec{args.widths};
  if (args.layers > 0) {
    spec = spec.Concat(ReceptiveFieldSpec::Uniform(args.layers, args.width));
  }
  if (spec.filter_widths.empty()) {
    throw UsageError("rf needs filter widths or --layers");
  }
  const ReceptiveField rf = ComputeReceptiveField(spec);
  io.out << "r=" << rf.future << " R=" << rf.total << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- s2s-decode

struct S2SArgs {
  std::string scorer_path;
  std::string lm_path;
  S2SConfig config;
};

int CmdS2SDecode(const S2SArgs& args, const Io& io) {
  const Logger log(io);
  args.config.Validate();
  auto in = OpenInput(args.scorer_path);
  const TableScorer scorer = LoadTableScorer(in);
  const auto lm = LoadLm(args.lm_path, scorer.visible(), args.config.alpha, log);
  const S2SResult result = Seq2SeqDecode(scorer, *lm, args.config);
  io.out << result.text << '\n' << "score\t" << FormatDouble(result.score) << '\n';
  return kExitOk;
}

std::string VersionText() {
  return std::string("streamctc ") + kVersion + "\n" + kEmissionFormatTag +
         "\n" + kNgramFormatTag + "\n" + kScorerFormatTag;
}

}  // namespace

int Run(const std::vector<std::string>& args, const Io& io) {
  CLI::App app{"Streaming CTC decoding toolkit", "streamctc"};
  app.set_version_flag("--version", VersionText());
  app.require_subcommand(1);

  DecodeArgs decode;
  auto* decode_cmd = app.add_subcommand("decode", "Offline beam search decoding");
  decode_cmd->add_option("emissions", decode.em_path, "CTCEM v1 file")
      ->required()
      ->check(CLI::ExistingFile);
  AddDecodeFlags(decode_cmd, decode.flags);
  decode_cmd->add_flag("--greedy", decode.greedy, "Collapse the argmax path");

  StreamArgs stream;
  auto* stream_cmd = app.add_subcommand(
      "stream", "Online decoding of emission rows read from stdin");
  AddDecodeFlags(stream_cmd, stream.flags);
  stream_cmd->add_option("--lag", stream.lag, "Lag r in frames")
      ->capture_default_str();
  stream_cmd->add_option("--start-frame", stream.start_frame,
                         "First frame to decode (1-based)");

  LmTrainArgs train;
  auto* train_cmd = app.add_subcommand("lm-train", "Train a character n-gram LM");
  train_cmd->add_option("corpus", train.corpus_path, "One sentence per line")
      ->required()
      ->check(CLI::ExistingFile);
  train_cmd->add_option("-o,--output", train.out_path, "Output file (default stdout)");
  train_cmd->add_option("--order", train.order, "n-gram order")->capture_default_str();
  train_cmd->add_option("--k", train.k, "Add-k smoothing constant")
      ->capture_default_str();
  train_cmd->add_option("--alphabet", train.alphabet, "Visible characters");

  MetricsArgs metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "Corpus WER and CER");
  metrics_cmd->add_option("pairs", metrics.pairs_path, "<reference> TAB <hypothesis> lines")
      ->required()
      ->check(CLI::ExistingFile);
  metrics_cmd->add_flag("--confusion", metrics.confusion,
                        "Print character substitution counts");

  OracleArgs oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Exact transcript probabilities by enumeration");
  oracle_cmd->add_option("emissions", oracle.em_path, "CTCEM v1 file")
      ->required()
      ->check(CLI::ExistingFile);
  oracle_cmd->add_option("--top", oracle.top, "Number of transcripts")
      ->capture_default_str();

  SimulateArgs simulate;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Write synthetic emissions for a transcript");
  simulate_cmd->add_option("text", simulate.text, "Ground-truth transcript")->required();
  simulate_cmd->add_option("-o,--output", simulate.out_path,
                           "Output file (default stdout)");
  simulate_cmd->add_option("--alphabet", simulate.alphabet, "Visible characters");
  simulate_cmd->add_option("--peak", simulate.config.peak_prob, "Peak probability")
      ->capture_default_str();
  simulate_cmd->add_option("--frames-per-char", simulate.config.frames_per_char,
                           "Mean frames per character")
      ->capture_default_str();
  simulate_cmd->add_option("--seed", simulate.config.seed, "Random seed")
      ->capture_default_str();
  simulate_cmd->add_flag("--no-blank-fill", simulate.no_blank_fill,
                         "No blank frames between characters");

  RfArgs rf;
  auto* rf_cmd = app.add_subcommand("rf", "Receptive field of a convolution stack");
  rf_cmd->add_option("widths", rf.widths, "Filter width per layer");
  rf_cmd->add_option("--layers", rf.layers, "Append this many layers of --width");
  rf_cmd->add_option("--width", rf.width, "Filter width for --layers")
      ->capture_default_str();

  S2SArgs s2s;
  auto* s2s_cmd = app.add_subcommand("s2s-decode", "Seq2seq beam search");
  s2s_cmd->add_option("scorer", s2s.scorer_path, "S2SM v1 file")
      ->required()
      ->check(CLI::ExistingFile);
  s2s_cmd->add_option("--lm", s2s.lm_path, "NGLM v1 language model")
      ->check(CLI::ExistingFile);
  s2s_cmd->add_option("--beam-width", s2s.config.width, "Beam width")
      ->capture_default_str();
  s2s_cmd->add_option("--alpha", s2s.config.alpha, "LM weight")->capture_default_str();
  s2s_cmd->add_option("--beta", s2s.config.beta, "Length penalty exponent")
      ->capture_default_str();
  s2s_cmd->add_option("--max-length", s2s.config.max_length, "Maximum output length")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, io.out, io.err);
    return kExitUsage;
  }

  try {
    if (*decode_cmd) return CmdDecode(decode, io);
    if (*stream_cmd) return CmdStream(stream, io);
    if (*train_cmd) return CmdLmTrain(train, io);
    if (*metrics_cmd) return CmdMetrics(metrics, io);
    if (*oracle_cmd) return CmdOracle(oracle, io);
    if (*simulate_cmd) return CmdSimulate(simulate, io);
    if (*rf_cmd) return CmdRf(rf, io);
    if (*s2s_cmd) return CmdS2SDecode(s2s, io);
  } catch (const UsageError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    io.err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ValidationError& e) {
    io.err << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CapacityError& e) {
    io.err << "too large: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace streamctc::cli
