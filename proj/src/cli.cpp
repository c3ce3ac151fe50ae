// Copyright 2026 The DNA2DBC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dna2dbc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "dna2dbc/damage.hpp"
#include "dna2dbc/errors.hpp"
#include "dna2dbc/pdf417.hpp"
#include "dna2dbc/pipeline.hpp"
#include "dna2dbc/reference_samples.hpp"
#include "dna2dbc/render.hpp"

namespace dna2dbc::cli {

namespace {

constexpr std::string_view kErasureCommentKey = "erased-cws:";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::optional<std::string>& path,
                  const std::string& content, std::ostream& out) {
  if (!path) {
    out << content;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file || !(file << content)) {
    throw ParseError("cannot write " + *path);
  }
}

std::uint64_t fill_budget(std::size_t max_erasures) {
  std::uint64_t budget = 1;
  for (std::size_t i = 0; i < std::min<std::size_t>(max_erasures, 20); ++i) {
    budget *= 8;
  }
  return budget;
}

std::vector<std::size_t> erased_cells_from_comments(
    const std::vector<std::string>& comments) {
  std::vector<std::size_t> cells;
  for (const std::string& comment : comments) {
    if (comment.rfind(kErasureCommentKey, 0) != 0) continue;
    std::istringstream body(comment.substr(kErasureCommentKey.size()));
    std::size_t index;
    while (body >> index) cells.push_back(index);
    if (!body.eof()) {
      throw ParseError("malformed erasure comment: " + comment);
    }
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

std::string erasure_comment(std::span<const std::size_t> cells) {
  std::string comment(kErasureCommentKey);
  for (std::size_t cell : cells) {
    comment += ' ';
    comment += std::to_string(cell);
  }
  return comment;
}

std::vector<std::uint8_t> parse_hex(const std::string& hex) {
  auto nibble = [&](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw ParseError(std::string("invalid hex digit '") + c + "'");
  };
  if (hex.size() % 2 != 0) {
    throw ParseError("hex input has odd length " + std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    bytes.push_back(
        static_cast<std::uint8_t>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  }
  return bytes;
}

std::string join_codewords(std::span<const unsigned> cws) {
  std::string line;
  for (std::size_t i = 0; i < cws.size(); ++i) {
    if (i > 0) line += ',';
    line += std::to_string(cws[i]);
  }
  return line;
}

const char* outcome_name(Recovery outcome) {
  switch (outcome) {
    case Recovery::Recovered: return "recovered";
    case Recovery::Ambiguous: return "ambiguous";
    default: return "unrecoverable";
  }
}

// Maps library errors onto the exit code contract.
int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (dynamic_cast<const CapacityError*>(&e) ||
      dynamic_cast<const BudgetError*>(&e) ||
      dynamic_cast<const DomainError*>(&e)) {
    return kCapacityFailure;
  }
  if (dynamic_cast<const VerifyError*>(&e) ||
      dynamic_cast<const StreamError*>(&e)) {
    return kVerifyFailure;
  }
  return kParseFailure;
}

}  // namespace

int cmd_encode(const EncodeOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    std::vector<DnaRecord> records = parse_fasta(read_file(options.input));
    if (records.empty()) {
      err << "error: " << options.input << " holds no records\n";
      return kParseFailure;
    }
    std::vector<std::uint8_t> cws =
        encode_tokens(tokenize(std::span<const DnaRecord>(records)),
                      options.start_mode);
    int level = options.level
                    ? *options.level
                    : std::min(recommended_level(cws.size()), 4);
    EccConfig config(level, Ring::Mod8);
    Payload payload = build_payload(cws, config);
    ModuleGrid grid = to_grid(payload);
    write_output(options.output, grid_to_pbm(grid), out);
    err << "encoded " << records.size() << " record(s): " << cws.size()
        << " data codewords, level " << level << ", " << payload.ncol()
        << "x" << payload.ncol() << " cells, " << grid.height << "x"
        << grid.width << " modules\n";
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_decode(const DecodeOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    PbmFile file = parse_pbm(read_file(options.input));
    std::vector<std::size_t> erased = erased_cells_from_comments(file.comments);
    if (erased.size() > options.max_erasures) {
      err << "error: " << erased.size()
          << " erased codewords exceed --max-erasures "
          << options.max_erasures << "\n";
      return kCapacityFailure;
    }
    std::vector<std::uint8_t> cells = grid_to_cells(file.grid);
    RecoveredSymbol result =
        recover_symbol(cells, erased, fill_budget(options.max_erasures));
    if (result.outcome == Recovery::Ambiguous) {
      err << "error: ambiguous recovery: several codeword fills verify\n";
      return kAmbiguous;
    }
    if (result.outcome == Recovery::Unrecoverable) {
      err << "error: correction codewords do not verify at any level\n";
      return kVerifyFailure;
    }
    std::vector<DnaRecord> records = payload_to_records(result.payload);
    write_output(options.output, serialize_fasta(records), out);
    err << "decoded " << records.size() << " record(s) at level "
        << result.level << " (" << erased.size() << " erased cells)\n";
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_pdf417(const Pdf417Options& options, std::ostream& out,
               std::ostream& err) {
  try {
    if (options.text.has_value() == options.byte_hex.has_value()) {
      err << "error: pass exactly one of --text and --byte\n";
      return kCapacityFailure;
    }
    std::vector<unsigned> cws;
    if (options.text) {
      cws = pdf417::text_high_level(*options.text);
    } else {
      cws = pdf417::byte_high_level(parse_hex(*options.byte_hex));
    }
    out << join_codewords(cws) << "\n";
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_damage(const DamageOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    PbmFile file = parse_pbm(read_file(options.input));
    std::vector<std::uint8_t> cells = grid_to_cells(file.grid);

    // The undamaged decode is the comparison baseline.
    RecoveredSymbol clean = recover_symbol(cells, {}, 1, options.level);
    if (clean.outcome != Recovery::Recovered) {
      err << "error: input symbol does not decode cleanly\n";
      return kVerifyFailure;
    }
    std::vector<DnaRecord> original = payload_to_records(clean.payload);

    const std::size_t ncol = file.grid.height - 2;
    std::vector<std::size_t> cell_pool(ncol * ncol);
    for (std::size_t i = 0; i < cell_pool.size(); ++i) cell_pool[i] = i;
    if (options.erase > cell_pool.size()) {
      err << "error: cannot erase " << options.erase << " of "
          << cell_pool.size() << " codeword cells\n";
      return kCapacityFailure;
    }
    Lcg rng(options.seed);
    for (std::size_t i = 0; i < options.erase; ++i) {
      std::size_t j =
          i + static_cast<std::size_t>(rng.below(cell_pool.size() - i));
      std::swap(cell_pool[i], cell_pool[j]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> modules;
    for (std::size_t i = 0; i < options.erase; ++i) {
      std::size_t r = 1 + cell_pool[i] / ncol;
      std::size_t c = 1 + (cell_pool[i] % ncol) * 3;
      modules.emplace_back(r, c);
      modules.emplace_back(r, c + 1);
      modules.emplace_back(r, c + 2);
    }
    DamagedSymbol damaged =
        erase_modules(file.grid, modules, options.seed, modules.size());

    if (options.output) {
      std::vector<std::string> comments{erasure_comment(damaged.erased_cws)};
      write_output(options.output, write_pbm(damaged.grid, comments), out);
    }

    std::vector<std::uint8_t> damaged_cells = grid_to_cells(damaged.grid);
    RecoveredSymbol result =
        recover_symbol(damaged_cells, damaged.erased_cws,
                       fill_budget(std::max<std::size_t>(options.erase, 4)),
                       options.level);
    bool equal = false;
    if (result.outcome == Recovery::Recovered) {
      equal = payload_to_records(result.payload) == original;
    }

    out << "damage trial: erased " << damaged.erased_cws.size()
        << " codeword cell(s) from a " << ncol << "x" << ncol
        << " symbol (seed " << options.seed << ")\n";
    out << "outcome: " << outcome_name(result.outcome);
    if (result.outcome == Recovery::Recovered) {
      out << "; decode " << (equal ? "matches" : "differs from")
          << " the original";
    }
    out << "\n\n";
    out << "erased_cw_count=" << damaged.erased_cws.size() << "\n";
    out << "outcome=" << outcome_name(result.outcome) << "\n";
    out << "decoded_equals_original=" << (equal ? 1 : 0) << "\n";
    out << "level=" << (result.outcome == Recovery::Recovered ? result.level
                                                              : clean.level)
        << "\n";
    out << "seed=" << options.seed << "\n";
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_selftest(std::ostream& out, std::ostream& err) {
  int failures = 0;
  auto check = [&](bool ok, const std::string& name) {
    if (ok) {
      out << "ok: " << name << "\n";
    } else {
      err << "FAILED: " << name << "\n";
      ++failures;
    }
  };

  try {
    check(dna_codeword(Nucleotide::A) == 1 && dna_codeword(Nucleotide::C) == 2 &&
              dna_codeword(Nucleotide::G) == 3 &&
              dna_codeword(Nucleotide::T) == 4 &&
              dna_codeword(Nucleotide::U) == 5,
          "nucleotide codeword map");

    check(pdf417::text_high_level("Super !") ==
              std::vector<unsigned>{567, 615, 137, 809, 329},
          "text compaction of \"Super !\"");

    const std::uint8_t super[] = {'S', 'u', 'p', 'e', 'r', '!'};
    check(pdf417::byte_group_value(super) == 91763861975585ULL,
          "six-byte group value of \"Super!\"");
    check(pdf417::byte_high_level(super) ==
              std::vector<unsigned>{924, 139, 776, 318, 439, 485},
          "byte compaction of \"Super!\"");
    const std::uint8_t super2[] = {'S', 'u', 'p', 'e', 'r', '!', '!'};
    check(pdf417::byte_high_level(super2) ==
              std::vector<unsigned>{901, 139, 776, 318, 439, 485, 33},
          "byte compaction of \"Super!!\"");

    const unsigned one[] = {1};
    check(correction_codewords(one, EccConfig(0, Ring::Mod929)) ==
              std::vector<unsigned>{917, 27},
          "level-0 correction of a lone codeword");

    check(recommended_level(40) == 2 && recommended_level(41) == 3 &&
              recommended_level(863) == 5,
          "recommended level boundaries");
    check(max_data_cws(0, Ring::Mod929) == 925 &&
              max_data_cws(8, Ring::Mod929) == 415,
          "data codeword capacity table");

    check(pdf417::row_indicator(0, 30, 4, 3, pdf417::Side::Left) == 9 &&
              pdf417::row_indicator(0, 30, 4, 3, pdf417::Side::Right) == 3,
          "row indicator fields");

    std::vector<DnaRecord> cortistatin =
        parse_fasta(kCortistatinSample);
    check(cortistatin.size() == 1 &&
              cortistatin[0].header.rfind("AB000263", 0) == 0 &&
              cortistatin[0].sequence.size() == 359 &&
              serialize_fasta(std::span<const DnaRecord>(cortistatin), 10)
                      .substr(cortistatin[0].header.size() + 2, 10) ==
                  "ACAAGATGCC",
          "cortistatin sample parses");

    std::vector<DnaRecord> insulin = parse_fasta(kInsulinSample);
    check(insulin.size() == 1 &&
              insulin[0].header == " insulin |homo sapiens" &&
              insulin[0].sequence.size() == 93,
          "insulin sample parses");

    EccConfig config(2, Ring::Mod8);
    Payload payload =
        encode_records(std::span<const DnaRecord>(insulin), config);
    ModuleGrid grid = to_grid(payload);
    Payload back = from_grid(pbm_to_grid(grid_to_pbm(grid)));
    check(back == payload &&
              payload_to_records(back) == insulin,
          "insulin sample round trip at level 2");
  } catch (const Error& e) {
    err << "FAILED: unexpected error: " << e.what() << "\n";
    ++failures;
  }

  if (failures == 0) {
    out << "selftest: all checks passed\n";
    return kOk;
  }
  err << "selftest: " << failures << " check(s) failed\n";
  return kParseFailure;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"DNA2DBC two-dimensional barcode toolkit"};
  app.require_subcommand(1);

  EncodeOptions encode_options;
  std::string start_mode = "dna";
  int encode_level = -1;
  CLI::App* encode = app.add_subcommand("encode", "FASTA file to PBM symbol");
  encode->add_option("--in", encode_options.input, "input FASTA file")
      ->required();
  encode->add_option("--out", encode_options.output,
                     "output PBM file (stdout when absent)");
  encode->add_option("--level", encode_level, "correction level")
      ->check(CLI::Range(0, 4));
  encode->add_option("--start-mode", start_mode, "initial mode")
      ->check(CLI::IsMember({"dna", "text"}));

  DecodeOptions decode_options;
  CLI::App* decode = app.add_subcommand("decode", "PBM symbol to FASTA");
  decode->add_option("--in", decode_options.input, "input PBM file")
      ->required();
  decode->add_option("--out", decode_options.output,
                     "output FASTA file (stdout when absent)");
  decode->add_option("--max-erasures", decode_options.max_erasures,
                     "erased codeword budget");

  Pdf417Options pdf417_options;
  CLI::App* pdf = app.add_subcommand(
      "pdf417", "print PDF417 high-level codewords");
  pdf->add_option("--text", pdf417_options.text, "text compaction input");
  pdf->add_option("--byte", pdf417_options.byte_hex,
                  "byte compaction input, hex");

  DamageOptions damage_options;
  int damage_level = -1;
  CLI::App* damage = app.add_subcommand(
      "damage", "erase codeword cells from a symbol and attempt recovery");
  damage->add_option("--in", damage_options.input, "input PBM file")
      ->required();
  damage->add_option("--out", damage_options.output, "damaged PBM file");
  damage->add_option("--seed", damage_options.seed, "generator seed");
  damage->add_option("--erase", damage_options.erase,
                     "codeword cells to erase");
  damage->add_option("--level", damage_level, "restrict recovery level")
      ->check(CLI::Range(0, 4));

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the built-in reference checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacityFailure;
  }

  if (encode->parsed()) {
    if (encode_level >= 0) encode_options.level = encode_level;
    encode_options.start_mode =
        start_mode == "text" ? Mode::Text : Mode::Dna;
    return cmd_encode(encode_options, out, err);
  }
  if (decode->parsed()) return cmd_decode(decode_options, out, err);
  if (pdf->parsed()) return cmd_pdf417(pdf417_options, out, err);
  if (damage->parsed()) {
    if (damage_level >= 0) damage_options.level = damage_level;
    return cmd_damage(damage_options, out, err);
  }
  if (selftest->parsed()) return cmd_selftest(out, err);
  err << "error: no subcommand\n";
  return kCapacityFailure;
}

}  // namespace dna2dbc::cli
