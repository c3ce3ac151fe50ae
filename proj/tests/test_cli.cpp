#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "doctest.h"
#include "dna2dbc/cli.hpp"
#include "dna2dbc/errors.hpp"
#include "dna2dbc/fasta.hpp"
#include "dna2dbc/layout.hpp"
#include "dna2dbc/reference_samples.hpp"
#include "dna2dbc/render.hpp"

using namespace dna2dbc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;

  TempDir() {
    path = fs::temp_directory_path() /
           ("dna2dbc-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

void write_text(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
  REQUIRE(out.good());
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_argv(std::initializer_list<const char*> args, std::string* out_text,
             std::string* err_text) {
  std::vector<const char*> argv(args);
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("encode writes a parsable symbol and a diagnostic line") {
  TempDir dir;
  write_text(dir.file("in.fasta"), kInsulinSample);
  std::ostringstream out;
  std::ostringstream err;
  cli::EncodeOptions options;
  options.input = dir.file("in.fasta");
  options.level = 2;
  CHECK(cli::cmd_encode(options, out, err) == cli::kOk);
  ModuleGrid grid = pbm_to_grid(out.str());
  CHECK(grid.height == 16);
  CHECK(grid.width == 44);
  CHECK(err.str() ==
        "encoded 1 record(s): 166 data codewords, level 2, 14x14 cells, "
        "16x44 modules\n");
}

TEST_CASE("the default level follows the data codeword count") {
  TempDir dir;
  write_text(dir.file("small.fasta"), ">h\nACGTACGT\n");
  std::ostringstream out;
  std::ostringstream err;
  cli::EncodeOptions options;
  options.input = dir.file("small.fasta");
  CHECK(cli::cmd_encode(options, out, err) == cli::kOk);
  CHECK(err.str().find("level 2") != std::string::npos);

  std::ostringstream out2;
  std::ostringstream err2;
  write_text(dir.file("insulin.fasta"), kInsulinSample);
  options.input = dir.file("insulin.fasta");
  CHECK(cli::cmd_encode(options, out2, err2) == cli::kOk);
  CHECK(err2.str().find("level 4") != std::string::npos);
}

TEST_CASE("encode failures map onto the exit contract") {
  TempDir dir;
  std::ostringstream out;
  std::ostringstream err;
  cli::EncodeOptions options;
  options.input = dir.file("absent.fasta");
  CHECK(cli::cmd_encode(options, out, err) == cli::kParseFailure);
  CHECK(err.str().find("cannot open") != std::string::npos);

  write_text(dir.file("empty.fasta"), "\n\n");
  options.input = dir.file("empty.fasta");
  std::ostringstream err2;
  CHECK(cli::cmd_encode(options, out, err2) == cli::kParseFailure);
  CHECK(err2.str().find("holds no records") != std::string::npos);

  write_text(dir.file("bad.fasta"), ">h\nACXT\n");
  options.input = dir.file("bad.fasta");
  std::ostringstream err3;
  CHECK(cli::cmd_encode(options, out, err3) == cli::kParseFailure);

  std::string big = ">big\n";
  big.append(4100, 'A');
  big += "\n";
  write_text(dir.file("big.fasta"), big);
  options.input = dir.file("big.fasta");
  options.level = 0;
  std::ostringstream err4;
  CHECK(cli::cmd_encode(options, out, err4) == cli::kCapacityFailure);
}

TEST_CASE("decode inverts encode through files") {
  TempDir dir;
  write_text(dir.file("in.fasta"), kCortistatinSample);
  cli::EncodeOptions encode;
  encode.input = dir.file("in.fasta");
  encode.output = dir.file("symbol.pbm");
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(cli::cmd_encode(encode, out, err) == cli::kOk);

  cli::DecodeOptions decode;
  decode.input = dir.file("symbol.pbm");
  decode.output = dir.file("out.fasta");
  std::ostringstream err2;
  CHECK(cli::cmd_decode(decode, out, err2) == cli::kOk);
  CHECK(parse_fasta(read_text(dir.file("out.fasta"))) ==
        parse_fasta(kCortistatinSample));
  CHECK(err2.str().find("decoded 1 record(s)") != std::string::npos);
}

TEST_CASE("decode failures map onto the exit contract") {
  TempDir dir;
  write_text(dir.file("small.fasta"), ">x\nACGT\n");
  cli::EncodeOptions encode;
  encode.input = dir.file("small.fasta");
  encode.output = dir.file("clean.pbm");
  encode.level = 0;
  std::ostringstream sink;
  std::ostringstream sink_err;
  REQUIRE(cli::cmd_encode(encode, sink, sink_err) == cli::kOk);
  std::string clean = read_text(dir.file("clean.pbm"));

  cli::DecodeOptions decode;
  std::ostringstream out;

  SUBCASE("unreadable grids exit 1") {
    write_text(dir.file("bad.pbm"), "P1\n2 2\n1 0 1\n");
    decode.input = dir.file("bad.pbm");
    std::ostringstream err;
    CHECK(cli::cmd_decode(decode, out, err) == cli::kParseFailure);
  }

  SUBCASE("frame violations exit 1") {
    ModuleGrid grid = pbm_to_grid(clean);
    grid.set(0, 0, 0);
    write_text(dir.file("frame.pbm"), grid_to_pbm(grid));
    decode.input = dir.file("frame.pbm");
    std::ostringstream err;
    CHECK(cli::cmd_decode(decode, out, err) == cli::kParseFailure);
    CHECK(err.str().find("positioning pattern violation") !=
          std::string::npos);
  }

  SUBCASE("unverifiable symbols exit 3") {
    // Flip one bit of the last meaningful cell; every level now fails.
    ModuleGrid grid = pbm_to_grid(clean);
    std::vector<std::uint8_t> cells = grid_to_cells(grid);
    unsigned v = decode_descriptor(std::span(cells).subspan(0, 4));
    std::size_t ncol = grid.height - 2;
    std::size_t i = v - 1;
    grid.set(1 + i / ncol, 1 + (i % ncol) * 3 + 2,
             static_cast<std::uint8_t>(1 - grid.at(1 + i / ncol,
                                                   1 + (i % ncol) * 3 + 2)));
    write_text(dir.file("broken.pbm"), grid_to_pbm(grid));
    decode.input = dir.file("broken.pbm");
    std::ostringstream err;
    CHECK(cli::cmd_decode(decode, out, err) == cli::kVerifyFailure);
    CHECK(err.str().find("do not verify") != std::string::npos);
  }

  SUBCASE("erasures above the budget exit 2") {
    std::string masked = clean;
    masked.insert(masked.find('\n') + 1, "# erased-cws: 4 5 6\n");
    write_text(dir.file("masked.pbm"), masked);
    decode.input = dir.file("masked.pbm");
    decode.max_erasures = 2;
    std::ostringstream err;
    CHECK(cli::cmd_decode(decode, out, err) == cli::kCapacityFailure);
    CHECK(err.str().find("exceed --max-erasures") != std::string::npos);
  }

  SUBCASE("ambiguous recoveries exit 4") {
    // Three erased data cells against two correction codewords.
    std::string masked = clean;
    masked.insert(masked.find('\n') + 1, "# erased-cws: 4 5 6\n");
    write_text(dir.file("masked.pbm"), masked);
    decode.input = dir.file("masked.pbm");
    std::ostringstream err;
    CHECK(cli::cmd_decode(decode, out, err) == cli::kAmbiguous);
    CHECK(err.str().find("ambiguous recovery") != std::string::npos);
  }

  SUBCASE("a malformed erasure comment exits 1") {
    std::string masked = clean;
    masked.insert(masked.find('\n') + 1, "# erased-cws: 4 five\n");
    write_text(dir.file("masked.pbm"), masked);
    decode.input = dir.file("masked.pbm");
    std::ostringstream err;
    CHECK(cli::cmd_decode(decode, out, err) == cli::kParseFailure);
    CHECK(err.str().find("malformed erasure comment") != std::string::npos);
  }
}

TEST_CASE("erasures inside the budget are decoded through the mask") {
  TempDir dir;
  write_text(dir.file("in.fasta"), kInsulinSample);
  cli::EncodeOptions encode;
  encode.input = dir.file("in.fasta");
  encode.output = dir.file("clean.pbm");
  encode.level = 2;
  std::ostringstream sink;
  std::ostringstream sink_err;
  REQUIRE(cli::cmd_encode(encode, sink, sink_err) == cli::kOk);

  cli::DamageOptions damage;
  damage.input = dir.file("clean.pbm");
  damage.output = dir.file("damaged.pbm");
  damage.seed = 7;
  damage.erase = 3;
  std::ostringstream report;
  std::ostringstream err;
  CHECK(cli::cmd_damage(damage, report, err) == cli::kOk);
  CHECK(report.str().find("erased_cw_count=3\n") != std::string::npos);
  CHECK(report.str().find("outcome=recovered\n") != std::string::npos);
  CHECK(report.str().find("decoded_equals_original=1\n") != std::string::npos);
  CHECK(report.str().find("level=2\n") != std::string::npos);
  CHECK(report.str().find("seed=7\n") != std::string::npos);

  PbmFile damaged = parse_pbm(read_text(dir.file("damaged.pbm")));
  REQUIRE(damaged.comments.size() == 1);
  CHECK(damaged.comments[0].rfind("erased-cws:", 0) == 0);

  cli::DecodeOptions decode;
  decode.input = dir.file("damaged.pbm");
  std::ostringstream out;
  std::ostringstream err2;
  CHECK(cli::cmd_decode(decode, out, err2) == cli::kOk);
  CHECK(parse_fasta(out.str()) == parse_fasta(kInsulinSample));
}

TEST_CASE("codeword printing for both compaction modes") {
  std::ostringstream out;
  std::ostringstream err;
  cli::Pdf417Options options;
  options.text = "Super !";
  CHECK(cli::cmd_pdf417(options, out, err) == cli::kOk);
  CHECK(out.str() == "567,615,137,809,329\n");

  cli::Pdf417Options bytes;
  bytes.byte_hex = "53757065722121";
  std::ostringstream out2;
  CHECK(cli::cmd_pdf417(bytes, out2, err) == cli::kOk);
  CHECK(out2.str() == "901,139,776,318,439,485,33\n");

  cli::Pdf417Options empty_bytes;
  empty_bytes.byte_hex = "";
  std::ostringstream out3;
  CHECK(cli::cmd_pdf417(empty_bytes, out3, err) == cli::kOk);
  CHECK(out3.str() == "901\n");
}

TEST_CASE("compaction flag misuse is rejected") {
  std::ostringstream out;
  cli::Pdf417Options neither;
  std::ostringstream err1;
  CHECK(cli::cmd_pdf417(neither, out, err1) == cli::kCapacityFailure);

  cli::Pdf417Options both;
  both.text = "A";
  both.byte_hex = "00";
  std::ostringstream err2;
  CHECK(cli::cmd_pdf417(both, out, err2) == cli::kCapacityFailure);

  cli::Pdf417Options bad_hex;
  bad_hex.byte_hex = "zz";
  std::ostringstream err3;
  CHECK(cli::cmd_pdf417(bad_hex, out, err3) == cli::kParseFailure);

  cli::Pdf417Options odd_hex;
  odd_hex.byte_hex = "f";
  std::ostringstream err4;
  CHECK(cli::cmd_pdf417(odd_hex, out, err4) == cli::kParseFailure);

  cli::Pdf417Options bad_text;
  bad_text.text = "\x01";
  std::ostringstream err5;
  CHECK(cli::cmd_pdf417(bad_text, out, err5) == cli::kCapacityFailure);
}

TEST_CASE("the argv front end wires subcommands and flag checks") {
  std::string out;
  std::string err;

  CHECK(run_argv({"dna2dbc"}, &out, &err) == cli::kCapacityFailure);
  CHECK(run_argv({"dna2dbc", "bogus"}, &out, &err) == cli::kCapacityFailure);
  CHECK(run_argv({"dna2dbc", "encode"}, &out, &err) == cli::kCapacityFailure);

  CHECK(run_argv({"dna2dbc", "--help"}, &out, &err) == cli::kOk);
  CHECK(out.find("encode") != std::string::npos);

  CHECK(run_argv({"dna2dbc", "pdf417", "--text", "AB"}, &out, &err) ==
        cli::kOk);
  CHECK(out == "1\n");

  TempDir dir;
  write_text(dir.file("in.fasta"), ">h\nACGT\n");
  CHECK(run_argv({"dna2dbc", "encode", "--in", dir.file("in.fasta").c_str(),
                  "--level", "9"},
                 &out, &err) == cli::kCapacityFailure);

  CHECK(run_argv({"dna2dbc", "encode", "--in", dir.file("in.fasta").c_str(),
                  "--start-mode", "rna"},
                 &out, &err) == cli::kCapacityFailure);

  CHECK(run_argv({"dna2dbc", "encode", "--in", dir.file("in.fasta").c_str(),
                  "--out", dir.file("sym.pbm").c_str(), "--level", "1"},
                 &out, &err) == cli::kOk);
  CHECK(err.find("level 1") != std::string::npos);

  CHECK(run_argv({"dna2dbc", "decode", "--in", dir.file("sym.pbm").c_str()},
                 &out, &err) == cli::kOk);
  CHECK(parse_fasta(out) == parse_fasta(">h\nACGT\n"));

  // A text-start symbol drops the leading mode switch; the decoder reads
  // codewords in DNA mode by default, so the stream no longer parses.
  CHECK(run_argv({"dna2dbc", "encode", "--in", dir.file("in.fasta").c_str(),
                  "--out", dir.file("text.pbm").c_str(), "--level", "1",
                  "--start-mode", "text"},
                 &out, &err) == cli::kOk);
  CHECK(run_argv({"dna2dbc", "decode", "--in", dir.file("text.pbm").c_str()},
                 &out, &err) == cli::kVerifyFailure);
}

TEST_CASE("the self test passes") {
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cli::cmd_selftest(out, err) == cli::kOk);
  CHECK(err.str().empty());
  CHECK(out.str().find("selftest: all checks passed") != std::string::npos);
}
