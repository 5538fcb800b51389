// kabelian command-line tool. Thin orchestration over the C API: every
// subcommand parses flags, calls one library operation and prints JSON (or
// CSV with --csv).
//
// Exit codes: 0 computed and the property holds, 1 computed and the property
// fails, 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kabelian/kabelian.h"

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WordDeleter {
  void operator()(kab_word* w) const { kab_word_free(w); }
};
struct ResultDeleter {
  void operator()(kab_search_result* r) const { kab_result_free(r); }
};
struct MorphismDeleter {
  void operator()(kab_morphism* m) const { kab_morphism_free(m); }
};
struct SequenceDeleter {
  void operator()(kab_sequence* s) const { kab_sequence_free(s); }
};
using WordPtr = std::unique_ptr<kab_word, WordDeleter>;
using ResultPtr = std::unique_ptr<kab_search_result, ResultDeleter>;
using MorphismPtr = std::unique_ptr<kab_morphism, MorphismDeleter>;
using SequencePtr = std::unique_ptr<kab_sequence, SequenceDeleter>;

void check(kab_status status) {
  if (status != KAB_OK) throw UsageError(kab_last_error());
}

struct Common {
  bool csv = false;
  bool digits = false;
  unsigned threads = 0;
};

std::string format(const kab_word* w, const Common& common) {
  char* text = nullptr;
  check(kab_word_format(w, common.digits ? KAB_PRESENT_DIGITS : KAB_PRESENT_LETTERS,
                        &text));
  std::string out(text);
  kab_string_free(text);
  return out;
}

WordPtr parse(const std::string& text) {
  kab_word* w = nullptr;
  check(kab_word_parse(text.c_str(), &w));
  return WordPtr(w);
}

WordPtr parse_in_alphabet(const std::string& text, int alphabet_size) {
  WordPtr w = parse(text);
  if (kab_word_length(w.get()) > 0 &&
      kab_word_alphabet_size(w.get()) > alphabet_size) {
    throw UsageError("word '" + text + "' uses letters outside an alphabet of size " +
                     std::to_string(alphabet_size));
  }
  return w;
}

std::string read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::string line;
  std::getline(in, line);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  return line;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  for (const auto& line : lines) out << line << '\n';
}

json occurrence_json(const kab_occurrence& occ, int p) {
  return json{{"start", occ.start},
              {"total_length", occ.total_length},
              {"block_length", occ.total_length / static_cast<std::size_t>(p)}};
}

// Shared flags of the search subcommands.
struct SearchFlags {
  int alphabet = 2;
  int k = 2;
  int power = 2;
  bool no_symmetry = false;
  std::uint64_t limit = 0;
  bool unlimited = false;
  std::size_t witness_cap = 1000;
  std::size_t split_depth = 8;
  std::string prefix;
  std::string prefix_file;

  void add(CLI::App* app, bool with_prefix) {
    app->add_option("--alphabet", alphabet, "Alphabet size")->required();
    app->add_option("--k", k, "Window length k")->required();
    app->add_option("--power", power, "Power exponent p (2 squares, 3 cubes)")
        ->required();
    app->add_flag("--no-symmetry", no_symmetry,
                  "Walk every word instead of canonical letter orders");
    app->add_option("--limit", limit, "Node budget (default 2^40)");
    app->add_flag("--unlimited", unlimited, "Disable the node budget");
    app->add_option("--witness-cap", witness_cap, "Maximum witnesses kept");
    app->add_option("--split-depth", split_depth, "Depth of parallel subtree split");
    if (with_prefix) {
      app->add_option("--prefix", prefix, "Fixed prefix word");
      app->add_option("--seed-prefix-file", prefix_file,
                      "Read the fixed prefix from the first line of a file");
    }
  }

  kab_search_params params(const Common& common) const {
    kab_search_params p;
    kab_search_params_init(&p);
    p.alphabet_size = alphabet;
    p.k = k;
    p.p = power;
    p.symmetry_reduction = no_symmetry ? 0 : 1;
    if (unlimited) {
      p.count_limit = 0;
    } else if (limit != 0) {
      p.count_limit = limit;
    }
    p.witness_cap = witness_cap;
    p.threads = common.threads;
    p.split_depth = split_depth;
    return p;
  }

  WordPtr prefix_word() const {
    if (!prefix.empty() && !prefix_file.empty()) {
      throw UsageError("--prefix and --seed-prefix-file are mutually exclusive");
    }
    if (!prefix_file.empty()) return parse_in_alphabet(read_word_file(prefix_file), alphabet);
    if (!prefix.empty()) return parse_in_alphabet(prefix, alphabet);
    return nullptr;
  }

  json header() const {
    return json{{"alphabet", alphabet}, {"k", k}, {"power", power}};
  }
};

void print_levels_csv(const kab_search_result* r) {
  std::cout << "length,count\n";
  const std::size_t from = std::max<std::size_t>(kab_result_base_length(r), 1);
  for (std::size_t n = from; n < kab_result_end_length(r); ++n) {
    std::cout << n << ',' << kab_result_count(r, n) << '\n';
  }
}

json levels_json(const kab_search_result* r) {
  json counts = json::array();
  for (std::size_t n = kab_result_base_length(r); n < kab_result_end_length(r); ++n) {
    counts.push_back(kab_result_count(r, n));
  }
  return json{{"base_length", kab_result_base_length(r)}, {"counts", counts}};
}

std::vector<std::string> witnesses(const kab_search_result* r, const Common& common) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < kab_result_num_witnesses(r); ++i) {
    out.push_back(format(kab_result_witness(r, i), common));
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"k-abelian equivalence and power-avoidance search"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--csv", common.csv, "CSV output where available");
  app.add_flag("--digits", common.digits, "Print words as 012... instead of abc...");
  app.add_option("--threads", common.threads, "Search threads (0 = all cores)");

  auto* equiv = app.add_subcommand("check-equiv", "Test k-abelian equivalence of two words");
  int equiv_k = 2;
  std::string equiv_u, equiv_v;
  bool equiv_sigs = false;
  equiv->add_option("--k", equiv_k, "Window length k")->required();
  equiv->add_option("u", equiv_u, "First word")->required();
  equiv->add_option("v", equiv_v, "Second word")->required();
  equiv->add_flag("--signatures", equiv_sigs, "Also print both signatures");

  auto add_word_source = [](CLI::App* sub, std::string& word, std::string& file) {
    sub->add_option("word", word, "Word to examine");
    sub->add_option("--file", file, "Read the word from the first line of a file");
  };

  auto* findp = app.add_subcommand("find-power", "Earliest k-abelian power in a word");
  int fp_k = 2, fp_p = 2;
  std::string fp_word, fp_file;
  findp->add_option("--k", fp_k)->required();
  findp->add_option("--power", fp_p)->required();
  add_word_source(findp, fp_word, fp_file);

  auto* verify = app.add_subcommand("verify-free", "Check that a word is k-abelian power-free");
  int vf_k = 2, vf_p = 2;
  std::string vf_word, vf_file;
  verify->add_option("--k", vf_k)->required();
  verify->add_option("--power", vf_p)->required();
  add_word_source(verify, vf_word, vf_file);

  auto* enumerate = app.add_subcommand("enumerate", "Count power-free words by length");
  SearchFlags en;
  std::size_t en_max = 1;
  std::string en_witness_file;
  en.add(enumerate, true);
  enumerate->add_option("--max", en_max, "Maximum length")->required();
  enumerate->add_option("--witness-file", en_witness_file, "Write the longest words here");

  auto* longest = app.add_subcommand("longest", "Longest power-free words up to a ceiling");
  SearchFlags lo;
  std::size_t lo_ceiling = 1;
  std::string lo_witness_file;
  lo.add(longest, false);
  longest->add_option("--ceiling", lo_ceiling, "Search ceiling")->required();
  longest->add_option("--witness-file", lo_witness_file, "Write the maximal words here");

  auto* grow = app.add_subcommand("grow", "Backtrack towards one long power-free word");
  SearchFlags gr;
  std::size_t gr_target = 1;
  std::string gr_order = "ascending", gr_output;
  gr.add(grow, true);
  grow->add_option("--target", gr_target, "Target length")->required();
  grow->add_option("--order", gr_order, "Letter order")
      ->check(CLI::IsMember({"ascending", "recent-failure-last"}));
  grow->add_option("--output", gr_output, "Write the word to this file instead of stdout");

  auto* ext = app.add_subcommand("extensions", "Count power-free extensions of a prefix");
  SearchFlags ex;
  std::size_t ex_delta = 1;
  ex.add(ext, true);
  ext->add_option("--delta", ex_delta, "Extension length")->required();

  auto* scan = app.add_subcommand("morphism-scan",
                                  "Earliest k-abelian power in a generated sequence");
  std::string sc_preset, sc_rules, sc_apply, sc_word;
  int sc_seed = 0, sc_k = 2, sc_p = 3;
  std::size_t sc_limit = 100;
  scan->add_option("--preset", sc_preset,
                   "thue_morse, cube_free_binary, ternary_to_binary or zeros_mod2");
  scan->add_option("--morphism", sc_rules, "Morphism rules such as 0:01,1:10");
  scan->add_option("--seed", sc_seed, "Seed letter of the fixed point");
  scan->add_option("--apply", sc_apply, "Scan the image of this word instead of a fixed point");
  scan->add_option("--word", sc_word, "Scan an explicit word");
  scan->add_option("--k", sc_k)->required();
  scan->add_option("--power", sc_p)->required();
  scan->add_option("--limit", sc_limit, "Prefix length to scan");
  bool sc_images_only = false;
  scan->add_flag("--images-only", sc_images_only,
                 "Only test whether the images are pairwise k-abelian equivalent");

  auto* classes = app.add_subcommand("classes-count", "Count k-abelian classes of length-n words");
  int cl_alphabet = 2, cl_k = 2;
  std::size_t cl_n = 0, cl_from = 0, cl_to = 0;
  std::string cl_mode = "auto";
  classes->add_option("--alphabet", cl_alphabet);
  classes->add_option("--k", cl_k)->required();
  classes->add_option("--n", cl_n, "Single word length");
  classes->add_option("--from", cl_from, "First length of a range");
  classes->add_option("--to", cl_to, "Last length of a range");
  classes->add_option("--mode", cl_mode)
      ->check(CLI::IsMember({"auto", "brute", "representative"}));

  auto* normal = app.add_subcommand("normal-form", "Binary 2- or 3-abelian class representative");
  int nf_k = 2;
  std::string nf_word;
  normal->add_option("--k", nf_k)->required()->check(CLI::IsMember({2, 3}));
  normal->add_option("word", nf_word)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto word_from = [](const std::string& word, const std::string& file) {
    if (!word.empty() && !file.empty()) throw UsageError("give a word or --file, not both");
    if (!file.empty()) return parse(read_word_file(file));
    if (word.empty()) throw UsageError("missing word");
    return parse(word);
  };

  if (*equiv) {
    WordPtr u = parse(equiv_u), v = parse(equiv_v);
    int eq = 0;
    check(kab_equivalent(u.get(), v.get(), equiv_k, &eq));
    json out{{"k", equiv_k}, {"equivalent", eq != 0}};
    if (equiv_sigs) {
      for (auto [name, w] : {std::pair{"u", u.get()}, std::pair{"v", v.get()}}) {
        char* sig = nullptr;
        check(kab_signature_json(w, equiv_k, 0, &sig));
        out[std::string("signature_") + name] = json::parse(sig);
        kab_string_free(sig);
      }
    }
    std::cout << out.dump() << '\n';
    return eq ? 0 : 1;
  }

  if (*findp) {
    WordPtr w = word_from(fp_word, fp_file);
    int found = 0;
    kab_occurrence occ{};
    check(kab_find_power(w.get(), fp_k, fp_p, &found, &occ));
    json out{{"k", fp_k}, {"power", fp_p}, {"found", found != 0}};
    if (found) out["occurrence"] = occurrence_json(occ, fp_p);
    std::cout << out.dump() << '\n';
    return found ? 0 : 1;
  }

  if (*verify) {
    WordPtr w = word_from(vf_word, vf_file);
    int found = 0;
    kab_occurrence occ{};
    check(kab_find_power(w.get(), vf_k, vf_p, &found, &occ));
    json out{{"k", vf_k},
             {"power", vf_p},
             {"length", kab_word_length(w.get())},
             {"power_free", found == 0}};
    if (found) out["first_power"] = occurrence_json(occ, vf_p);
    std::cout << out.dump() << '\n';
    return found ? 1 : 0;
  }

  if (*enumerate || *longest) {
    const bool is_enum = enumerate->parsed();
    const SearchFlags& f = is_enum ? en : lo;
    kab_search_params params = f.params(common);
    params.max_length = is_enum ? en_max : lo_ceiling;
    kab_search_result* raw = nullptr;
    if (is_enum) {
      WordPtr prefix = f.prefix_word();
      check(kab_enumerate(&params, prefix.get(), &raw));
    } else {
      check(kab_longest(&params, &raw));
    }
    ResultPtr r(raw);
    if (kab_result_limit_exceeded(r.get())) {
      throw UsageError("node budget exceeded; raise --limit or use --unlimited");
    }
    const auto words = witnesses(r.get(), common);
    const std::string& wfile = is_enum ? en_witness_file : lo_witness_file;
    if (!wfile.empty()) write_lines(wfile, words);
    if (common.csv) {
      print_levels_csv(r.get());
      return 0;
    }
    json out = f.header();
    if (is_enum) {
      out["max_length"] = en_max;
      out["levels"] = levels_json(r.get());
      out["longest_length"] = kab_result_longest(r.get());
      out["nodes"] = kab_result_nodes(r.get());
    } else {
      out["ceiling"] = lo_ceiling;
      out["longest"] = kab_result_longest(r.get());
      out["ceiling_reached"] = kab_result_ceiling_reached(r.get()) != 0;
      out["witness_count"] = kab_result_witness_count(r.get());
      out["witnesses"] = words;
    }
    std::cout << out.dump() << '\n';
    return 0;
  }

  if (*grow) {
    kab_search_params params = gr.params(common);
    WordPtr prefix = gr.prefix_word();
    kab_grow_status status = KAB_GROW_REACHED;
    kab_word* raw = nullptr;
    check(kab_grow(&params, prefix.get(), gr_target,
                   gr_order == "ascending" ? KAB_ORDER_ASCENDING
                                           : KAB_ORDER_RECENT_FAILURE_LAST,
                   &status, &raw));
    WordPtr w(raw);
    static constexpr const char* kNames[] = {"reached", "exhausted", "limit_exceeded"};
    json out = gr.header();
    out["target"] = gr_target;
    out["status"] = kNames[status];
    out["length"] = kab_word_length(w.get());
    const std::string text = format(w.get(), common);
    if (!gr_output.empty()) {
      write_lines(gr_output, {text});
      out["output"] = gr_output;
    } else {
      out["word"] = text;
    }
    std::cout << out.dump() << '\n';
    return status == KAB_GROW_REACHED ? 0 : (status == KAB_GROW_EXHAUSTED ? 1 : 2);
  }

  if (*ext) {
    kab_search_params params = ex.params(common);
    WordPtr prefix = ex.prefix_word();
    if (!prefix) prefix = parse("");
    kab_search_result* raw = nullptr;
    check(kab_count_extensions(&params, prefix.get(), ex_delta, &raw));
    ResultPtr r(raw);
    if (common.csv) {
      print_levels_csv(r.get());
      return 0;
    }
    json out = ex.header();
    out["prefix_length"] = kab_word_length(prefix.get());
    out["delta"] = ex_delta;
    out["levels"] = levels_json(r.get());
    std::cout << out.dump() << '\n';
    return 0;
  }

  if (*scan) {
    const int sources = !sc_preset.empty() + !sc_rules.empty() + !sc_word.empty();
    if (sources != 1) throw UsageError("give exactly one of --preset, --morphism, --word");
    json out{{"k", sc_k}, {"power", sc_p}, {"limit", sc_limit}};
    MorphismPtr m;
    SequencePtr seq;
    kab_sequence* raw_seq = nullptr;
    if (sc_preset == "zeros_mod2") {
      check(kab_sequence_zeros_mod2(&raw_seq));
      seq.reset(raw_seq);
      out["sequence"] = "zeros_mod2";
    } else if (!sc_word.empty()) {
      WordPtr w = parse(sc_word);
      check(kab_sequence_explicit(w.get(), &raw_seq));
      seq.reset(raw_seq);
      out["sequence"] = "explicit";
    } else {
      kab_morphism* raw_m = nullptr;
      check(sc_preset.empty() ? kab_morphism_parse(sc_rules.c_str(), &raw_m)
                              : kab_morphism_preset(sc_preset.c_str(), &raw_m));
      m.reset(raw_m);
      int eq = 0;
      check(kab_morphism_images_equivalent(m.get(), sc_k, &eq));
      out["images_pairwise_equivalent"] = eq != 0;
      if (sc_images_only) {
        std::cout << out.dump() << '\n';
        return eq ? 0 : 1;
      }
      if (!sc_apply.empty()) {
        WordPtr w = parse(sc_apply);
        kab_word* image = nullptr;
        check(kab_morphism_apply(m.get(), w.get(), &image));
        WordPtr img(image);
        check(kab_sequence_explicit(img.get(), &raw_seq));
        seq.reset(raw_seq);
        out["sequence"] = "image";
        out["image"] = format(img.get(), common);
      } else {
        if (sc_seed < 0 || sc_seed > 255) throw UsageError("--seed out of range");
        check(kab_sequence_fixed_point(m.get(), static_cast<std::uint8_t>(sc_seed),
                                       &raw_seq));
        seq.reset(raw_seq);
        out["sequence"] = "fixed_point";
        out["seed"] = sc_seed;
      }
    }
    int found = 0;
    kab_occurrence occ{};
    check(kab_scan_earliest_power(seq.get(), sc_k, sc_p, sc_limit, &found, &occ));
    out["found"] = found != 0;
    if (found) out["occurrence"] = occurrence_json(occ, sc_p);
    std::cout << out.dump() << '\n';
    return found ? 0 : 1;
  }

  if (*classes) {
    if (cl_n != 0 && (cl_from != 0 || cl_to != 0)) {
      throw UsageError("give --n or --from/--to, not both");
    }
    if (cl_n != 0) cl_from = cl_to = cl_n;
    if (cl_from == 0 || cl_to < cl_from) throw UsageError("give --n or a valid --from/--to range");
    const kab_count_mode mode = cl_mode == "brute"            ? KAB_COUNT_BRUTE_FORCE
                                : cl_mode == "representative" ? KAB_COUNT_REPRESENTATIVE
                                                              : KAB_COUNT_AUTO;
    json rows = json::array();
    if (common.csv) std::cout << "n,count\n";
    for (std::size_t n = cl_from; n <= cl_to; ++n) {
      std::uint64_t count = 0;
      check(kab_count_classes(n, cl_alphabet, cl_k, mode, &count));
      if (common.csv) {
        std::cout << n << ',' << count << '\n';
      } else {
        rows.push_back(json{{"n", n}, {"count", count}});
      }
    }
    if (!common.csv) {
      std::cout << json{{"alphabet", cl_alphabet}, {"k", cl_k}, {"mode", cl_mode},
                        {"classes", rows}}
                       .dump()
                << '\n';
    }
    return 0;
  }

  if (*normal) {
    WordPtr w = parse(nf_word);
    kab_word* raw = nullptr;
    json out{{"k", nf_k}, {"word", format(w.get(), common)}};
    kab_status st = KAB_OK;
    json form;
    if (nf_k == 2) {
      kab_normal_form2 nf{};
      st = kab_normal_form2_of(w.get(), &nf, &raw);
      if (st == KAB_OK) {
        form = json{{"leading", nf.leading == 0 ? "a" : "b"},
                    {"k", nf.k}, {"l", nf.l}, {"m", nf.m}, {"n", nf.n}};
      }
    } else {
      kab_normal_form3 nf{};
      st = kab_normal_form3_of(w.get(), &nf, &raw);
      if (st == KAB_OK && nf.has_form) {
        static constexpr const char* kHeads[] = {"aa", "bb", "ab", "ba"};
        static constexpr const char* kTails[] = {"aab", "abb"};
        form = json{{"head", kHeads[nf.head]}, {"tail", kTails[nf.tail]},
                    {"k", nf.k}, {"l", nf.l}, {"m", nf.m}, {"g", nf.g},
                    {"h", nf.h}, {"i", nf.i}, {"j", nf.j}};
      }
    }
    if (st == KAB_ERR_NOT_REPRESENTABLE) {
      out["representable"] = false;
      out["reason"] = kab_last_error();
      std::cout << out.dump() << '\n';
      return 1;
    }
    check(st);
    WordPtr real(raw);
    out["representable"] = true;
    out["form"] = form;
    out["realization"] = format(real.get(), common);
    std::cout << out.dump() << '\n';
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
