#include "binedge/cert_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "binedge/bei.hpp"
#include "binedge/errors.hpp"
#include "binedge/graph_io.hpp"
#include "binedge/poly_text.hpp"

namespace binedge {
namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

bool starts_with_word(const std::string& line, std::string_view word) {
  return line.size() > word.size() && line.compare(0, word.size(), word) == 0 &&
         (line[word.size()] == ' ' || line[word.size()] == '\t');
}

}  // namespace

Certificate parse_certificate(std::string_view text, const std::string& base_dir) {
  enum class Section { Header, Target, Witness, Claims } section = Section::Header;
  std::optional<RingSpec> ring;
  Certificate cert{"", "", RingSpec(2, 1), std::nullopt, {}, {}, {}, {}, {}};

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  auto need_ring = [&]() -> const RingSpec& {
    if (!ring) throw fail("'ring m n char' must come before the sections");
    return *ring;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;

    if (line == "target:") { section = Section::Target; need_ring(); continue; }
    if (line == "witness:") { section = Section::Witness; need_ring(); continue; }
    if (line == "claims:") { section = Section::Claims; need_ring(); continue; }

    try {
      switch (section) {
        case Section::Header:
          if (starts_with_word(line, "name")) {
            cert.name = trim(std::string_view(line).substr(4));
          } else if (starts_with_word(line, "source")) {
            cert.source = trim(std::string_view(line).substr(6));
          } else if (starts_with_word(line, "ring")) {
            std::istringstream fields(line.substr(4));
            long m = 0, n = 0, p = 0;
            std::string extra;
            if (!(fields >> m >> n >> p) || (fields >> extra)) throw fail("expected 'ring m n char'");
            if (m < 2 || n < 1 || p < 0) throw fail("invalid ring parameters");
            ring.emplace(static_cast<int>(m), static_cast<int>(n), static_cast<std::uint32_t>(p));
            cert.ring = *ring;
          } else {
            throw fail("unexpected '" + line + "'");
          }
          break;
        case Section::Target:
          if (starts_with_word(line, "gbei")) {
            const std::filesystem::path file = trim(std::string_view(line).substr(4));
            const auto path = file.is_absolute() ? file : std::filesystem::path(base_dir) / file;
            SimpleGraph g = read_graph_file(path.string());
            if (g.vertex_count() != ring->cols())
              throw fail("graph has " + std::to_string(g.vertex_count()) + " vertices, ring has " +
                         std::to_string(ring->cols()) + " columns");
            for (auto& f : gbei_generators(*ring, g)) cert.target.push_back(std::move(f));
            for (const auto& [a, b] : g.edges())
              for (int k = 1; k <= ring->rows(); ++k)
                for (int l = k + 1; l <= ring->rows(); ++l)
                  cert.target_text.push_back(ring->rows() == 2
                                                 ? "f[" + std::to_string(a) + "," + std::to_string(b) + "]"
                                                 : "minor[" + std::to_string(k) + "," + std::to_string(l) + "|" +
                                                       std::to_string(a) + "," + std::to_string(b) + "]");
            cert.target_graph = std::move(g);
          } else {
            cert.target.push_back(parse_polynomial(line, *ring));
            cert.target_text.push_back(line);
          }
          break;
        case Section::Witness:
          cert.witness.push_back(parse_polynomial(line, *ring));
          cert.witness_text.push_back(line);
          break;
        case Section::Claims: {
          if (line.size() < 2 || line[0] != 'f' || (line[1] != ' ' && line[1] != '\t'))
            throw fail("expected 'f <polynomial> ^ k'");
          const auto caret = line.rfind('^');
          if (caret == std::string::npos) throw fail("claim has no exponent");
          const std::string poly = trim(std::string_view(line).substr(2, caret - 2));
          const std::string exp = trim(std::string_view(line).substr(caret + 1));
          std::size_t used = 0;
          int k = 0;
          try {
            k = std::stoi(exp, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used == 0 || used != exp.size() || k < 1) throw fail("invalid exponent '" + exp + "'");
          cert.claims.push_back({parse_polynomial(poly, *ring), k, poly});
          break;
        }
      }
    } catch (const ParseError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      throw fail(what);
    } catch (const InvalidArgument& e) {
      throw fail(e.what());
    }
  }
  if (!ring) throw ParseError("certificate has no ring line");
  if (cert.target.empty()) throw ParseError("certificate has an empty target section");
  if (cert.witness.empty()) throw ParseError("certificate has an empty witness section");
  // Keep a graph target only if nothing else was listed next to it.
  if (cert.target_graph && cert.target.size() != gbei_generators(*ring, *cert.target_graph).size())
    cert.target_graph.reset();
  return cert;
}

Certificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open certificate file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_certificate(buffer.str(), dir.empty() ? "." : dir.string());
}

std::string format_certificate(const Certificate& cert, const std::string& graph_file) {
  std::ostringstream out;
  if (!cert.name.empty()) out << "name " << cert.name << "\n";
  if (!cert.source.empty()) out << "source " << cert.source << "\n";
  out << "ring " << cert.ring.rows() << " " << cert.ring.cols() << " " << cert.ring.characteristic() << "\n";
  out << "target:\n";
  if (cert.target_graph && !graph_file.empty()) {
    out << "gbei " << graph_file << "\n";
  } else {
    for (std::size_t i = 0; i < cert.target.size(); ++i)
      out << (i < cert.target_text.size() ? cert.target_text[i] : format_polynomial(cert.target[i])) << "\n";
  }
  out << "witness:\n";
  for (std::size_t i = 0; i < cert.witness.size(); ++i)
    out << (i < cert.witness_text.size() ? cert.witness_text[i] : format_polynomial(cert.witness[i])) << "\n";
  out << "claims:\n";
  for (const auto& c : cert.claims) out << "f " << c.label << " ^ " << c.exponent << "\n";
  return out.str();
}

}  // namespace binedge
