#include "qmsg/io.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace qmsg::io {

namespace {

// nlohmann exceptions surface as parse errors at the module boundary.
template <typename F>
auto parse_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(e.what());
  }
}

std::vector<complexd> read_vector(const json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("expected a nonempty vector");
  std::vector<complexd> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(read_complex(e));
  return v;
}

std::vector<double> read_real_vector(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string("expected an array for ") + what);
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw parse_error(std::string(what) + " must hold numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

BasisString read_digits(const json& j) {
  if (!j.is_array()) throw parse_error("digits must be an array");
  BasisString s;
  s.digits.reserve(j.size());
  for (const auto& d : j) {
    if (!d.is_number_unsigned()) throw parse_error("digits must be nonnegative integers");
    s.digits.push_back(d.get<std::uint32_t>());
  }
  return s;
}

constexpr std::uint64_t kExpansionCap = 1u << 20;

// Expands the grand-canonical shorthand into the explicit product ensemble.
Ensemble expand_grand_canonical(const Alphabet& alphabet,
                                const std::vector<double>& priors,
                                const std::vector<double>& lambdas,
                                const SpaceShape& shape) {
  if (priors.size() != alphabet.size())
    throw validation_error("one prior per letter required");
  double psum = 0.0;
  for (double p : priors) {
    if (p < 0.0) throw validation_error("priors must be nonnegative");
    psum += p;
  }
  if (std::abs(psum - 1.0) > tol::prob)
    throw validation_error("priors must sum to 1");
  double lsum = 0.0;
  for (double l : lambdas) {
    if (l < 0.0) throw validation_error("length probabilities must be nonnegative");
    lsum += l;
  }
  if (std::abs(lsum - 1.0) > tol::prob)
    throw validation_error("length probabilities must sum to 1");

  std::vector<EnsembleEntry> entries;
  std::uint64_t produced = 0;
  for (std::size_t n = 0; n < lambdas.size(); ++n) {
    if (lambdas[n] == 0.0) continue;
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < n; ++i) words *= alphabet.size();
    produced += words;
    if (produced > kExpansionCap)
      throw cap_error("grand-canonical expansion exceeds the entry cap");
    std::vector<std::size_t> letters(n, 0);
    for (std::uint64_t w = 0; w < words; ++w) {
      std::uint64_t rest = w;
      double p = lambdas[n];
      for (std::size_t pos = n; pos-- > 0;) {
        letters[pos] = rest % alphabet.size();
        rest /= alphabet.size();
        p *= priors[letters[pos]];
      }
      if (p == 0.0) continue;
      entries.push_back(
          EnsembleEntry{product_message(alphabet, letters, shape.max_length()), p});
    }
  }
  return Ensemble(shape, std::move(entries));
}

}  // namespace

complexd read_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw parse_error("complex values must be [re, im] number pairs");
  return complexd{j[0].get<double>(), j[1].get<double>()};
}

json write_complex(complexd v) { return json::array({v.real(), v.imag()}); }

json write_vector(const std::vector<complexd>& v) {
  json out = json::array();
  for (const complexd& x : v) out.push_back(write_complex(x));
  return out;
}

json write_matrix(const DenseMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(write_complex(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

AlphabetFile parse_alphabet(const json& j) {
  return parse_guard([&] {
    if (!j.is_object() || !j.contains("letters"))
      throw parse_error("alphabet file needs a \"letters\" array");
    std::vector<std::vector<complexd>> vectors;
    std::vector<std::string> labels;
    for (const auto& entry : j.at("letters")) {
      if (!entry.is_object() || !entry.contains("label") || !entry.contains("vector"))
        throw parse_error("each letter needs \"label\" and \"vector\"");
      labels.push_back(entry.at("label").get<std::string>());
      vectors.push_back(read_vector(entry.at("vector")));
    }
    AlphabetFile out{Alphabet(std::move(vectors), std::move(labels)), std::nullopt};
    if (j.contains("priors"))
      out.priors = read_real_vector(j.at("priors"), "priors");
    return out;
  });
}

AlphabetFile load_alphabet(const std::filesystem::path& path) {
  return parse_alphabet(load_json(path));
}

ManyLetterState parse_state(const json& j) {
  return parse_guard([&] {
    if (!j.is_object() || !j.contains("K") || !j.contains("N") || !j.contains("terms"))
      throw parse_error("state file needs \"K\", \"N\" and \"terms\"");
    const SpaceShape shape(j.at("K").get<std::size_t>(), j.at("N").get<std::size_t>());
    ManyLetterState::AmplitudeMap amps;
    for (const auto& term : j.at("terms")) {
      if (!term.is_object() || !term.contains("digits") || !term.contains("amp"))
        throw parse_error("each term needs \"digits\" and \"amp\"");
      const std::uint64_t idx = shape.index_of(read_digits(term.at("digits")));
      if (!amps.emplace(idx, read_complex(term.at("amp"))).second)
        throw parse_error("duplicate term for one basis string");
    }
    return ManyLetterState::normalized(shape, std::move(amps));
  });
}

json write_state(const ManyLetterState& state) {
  json out;
  out["K"] = state.shape().letter_dim();
  out["N"] = state.shape().max_length();
  json terms = json::array();
  for (const auto& [idx, amp] : state.amplitudes()) {
    json term;
    term["digits"] = state.shape().string_at(idx).digits;
    term["amp"] = write_complex(amp);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Observable parse_observable(const json& j, const SpaceShape& shape) {
  return parse_guard([&] {
    if (!j.is_object()) throw parse_error("observable file must be an object");
    if (j.contains("dense")) {
      const auto& rows = j.at("dense");
      if (!rows.is_array()) throw parse_error("\"dense\" must be a matrix");
      DenseMatrix m(rows.size(), rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != rows.size())
          throw parse_error("\"dense\" must be square");
        for (std::size_t c = 0; c < rows.size(); ++c)
          m(r, c) = read_complex(rows[r][c]);
      }
      return Observable::dense_from_input(shape, std::move(m));
    }
    if (!j.contains("diagonal"))
      throw parse_error("observable needs \"diagonal\" or \"dense\"");
    const double fallback = j.contains("default") ? j.at("default").get<double>() : 0.0;
    auto values = std::make_shared<std::map<std::uint64_t, double>>();
    for (const auto& entry : j.at("diagonal")) {
      if (!entry.is_object() || !entry.contains("digits") || !entry.contains("value"))
        throw parse_error("each diagonal entry needs \"digits\" and \"value\"");
      (*values)[shape.index_of(read_digits(entry.at("digits")))] =
          entry.at("value").get<double>();
    }
    SpaceShape captured = shape;
    return Observable::diagonal(
        shape, [values, fallback, captured](const BasisString& s) {
          const auto it = values->find(captured.index_of(s));
          return it == values->end() ? fallback : it->second;
        });
  });
}

EnsembleFile parse_ensemble(const json& j, const std::filesystem::path& base_dir,
                            std::optional<std::size_t> max_length_override) {
  return parse_guard([&] {
    if (!j.is_object() || !j.contains("alphabet"))
      throw parse_error("ensemble file needs an \"alphabet\"");
    AlphabetFile af = j.at("alphabet").is_string()
                          ? load_alphabet(base_dir / j.at("alphabet").get<std::string>())
                          : parse_alphabet(j.at("alphabet"));
    Alphabet alphabet = std::move(af.alphabet);

    if (j.contains("grand_canonical")) {
      const auto& gc = j.at("grand_canonical");
      std::vector<double> priors =
          gc.contains("priors") ? read_real_vector(gc.at("priors"), "priors")
          : af.priors           ? *af.priors
                                : throw parse_error("grand_canonical needs priors");
      const std::vector<double> lambdas = read_real_vector(gc.at("lambdas"), "lambdas");
      if (lambdas.empty()) throw parse_error("lambdas must be nonempty");
      std::size_t max_len = lambdas.size() - 1;
      if (max_length_override) {
        if (*max_length_override < max_len)
          throw validation_error("length override below the lambda range");
        max_len = *max_length_override;
      }
      const SpaceShape shape(alphabet.rank(), max_len);
      Ensemble ensemble = expand_grand_canonical(alphabet, priors, lambdas, shape);
      return EnsembleFile{std::move(alphabet), shape, std::move(ensemble), true};
    }

    if (!j.contains("entries"))
      throw parse_error("ensemble file needs \"entries\"");
    // N defaults to the desk-scale truncation when a file omits it.
    std::size_t max_len = j.contains("N") ? j.at("N").get<std::size_t>() : 8;
    if (max_length_override) max_len = *max_length_override;
    const SpaceShape shape(alphabet.rank(), max_len);

    std::vector<EnsembleEntry> entries;
    for (const auto& entry : j.at("entries")) {
      if (!entry.is_object() || !entry.contains("state") || !entry.contains("p"))
        throw parse_error("each entry needs \"state\" and \"p\"");
      const double p = entry.at("p").get<double>();
      const auto& st = entry.at("state");
      if (!st.is_object()) throw parse_error("entry state must be an object");
      if (st.contains("product")) {
        std::vector<std::size_t> letters;
        for (const auto& d : st.at("product")) {
          if (!d.is_number_unsigned())
            throw parse_error("product indices must be nonnegative integers");
          const std::size_t li = d.get<std::size_t>();
          if (li >= alphabet.size())
            throw validation_error("product letter index out of range");
          letters.push_back(li);
        }
        entries.push_back(EnsembleEntry{product_message(alphabet, letters, max_len), p});
      } else if (st.contains("terms")) {
        if (st.contains("K") &&
            st.at("K").get<std::size_t>() != shape.letter_dim())
          throw validation_error("entry state K differs from the alphabet rank");
        if (st.contains("N") && st.at("N").get<std::size_t>() != max_len)
          throw validation_error("entry state N differs from the ensemble N");
        ManyLetterState::AmplitudeMap amps;
        for (const auto& term : st.at("terms")) {
          if (!term.is_object() || !term.contains("digits") || !term.contains("amp"))
            throw parse_error("each term needs \"digits\" and \"amp\"");
          const std::uint64_t idx = shape.index_of(read_digits(term.at("digits")));
          if (!amps.emplace(idx, read_complex(term.at("amp"))).second)
            throw parse_error("duplicate term for one basis string");
        }
        entries.push_back(
            EnsembleEntry{ManyLetterState::normalized(shape, std::move(amps)), p});
      } else {
        throw parse_error("entry state needs \"product\" or \"terms\"");
      }
    }
    return EnsembleFile{std::move(alphabet), shape,
                        Ensemble(shape, std::move(entries)), false};
  });
}

EnsembleFile load_ensemble(const std::filesystem::path& path,
                           std::optional<std::size_t> max_length_override) {
  return parse_ensemble(load_json(path), path.parent_path(), max_length_override);
}

json write_histogram(const Histogram& h) {
  json out;
  json outcomes = json::array();
  for (const auto& bin : h.bins) {
    json b;
    b["label"] = bin.label;
    b["count"] = bin.count;
    b["freq"] = bin.frequency;
    outcomes.push_back(std::move(b));
  }
  out["outcomes"] = std::move(outcomes);
  out["mean_length"] = h.mean_length;
  out["variance"] = h.variance;
  out["seed"] = h.seed;
  out["trials"] = h.trials;
  return out;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path.string());
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a_hex(buf.str());
}

json tolerance_report() {
  json t;
  t["norm"] = tol::norm;
  t["orth"] = tol::orth;
  t["prob"] = tol::prob;
  t["trace"] = tol::trace;
  t["psd"] = tol::psd;
  t["recon"] = tol::recon;
  t["herm"] = tol::herm;
  t["herm_input"] = tol::herm_input;
  t["rank"] = tol::rank;
  t["amp"] = tol::amp;
  t["eig"] = tol::eig;
  t["block"] = tol::block;
  t["imag"] = tol::imag;
  return t;
}

}  // namespace qmsg::io
