#include "wpvol/store.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <tuple>
#include <vector>

namespace wpvol {

namespace {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

struct Entry {
  Signature sig;
  MultiIndex key;
  const PiPoly* value;
};

}  // namespace

std::string serialize_cache(const CoeffTable& table) {
  std::vector<Entry> entries;
  table.for_each([&](Signature sig, const MultiIndex& key, const PiPoly& val) {
    entries.push_back({sig, key, &val});
  });
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tuple(a.sig.chi(), a.sig.g, a.sig.n, a.key) <
           std::tuple(b.sig.chi(), b.sig.g, b.sig.n, b.key);
  });
  std::string out = "WPVOL-CACHE 1 convention=";
  out += convention_name(table.convention());
  out += '\n';
  for (const Entry& e : entries) {
    out += std::to_string(e.sig.g);
    out += ' ';
    out += std::to_string(e.sig.n);
    out += " |";
    for (unsigned a : e.key) {
      out += ' ';
      out += std::to_string(a);
    }
    out += " | ";
    out += e.value->cache_str();
    out += '\n';
  }
  out += "#sha256 " + sha256_hex(out) + "\n";
  return out;
}

void save_cache(const CoeffTable& table, const std::filesystem::path& dest) {
  std::string bytes = serialize_cache(table);
  std::filesystem::path dir = dest.parent_path();
  if (dir.empty()) dir = ".";
  std::mt19937_64 rng(std::random_device{}());
  std::filesystem::path tmp =
      dir / (dest.filename().string() + ".tmp." + std::to_string(rng()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw cache_error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      std::filesystem::remove(tmp);
      throw cache_error("short write to " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, dest);
}

CoeffTable load_cache(const std::filesystem::path& src,
                      std::optional<Convention> expected) {
  std::ifstream in(src, std::ios::binary);
  if (!in) throw cache_error("cannot open " + src.string());
  std::stringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();

  // split into lines; require every line (incl. the footer) to end in \n
  std::vector<std::string_view> lines;
  {
    size_t pos = 0;
    std::string_view sv = bytes;
    while (pos < sv.size()) {
      size_t nl = sv.find('\n', pos);
      if (nl == std::string_view::npos)
        throw cache_error("missing trailing newline", 0);
      lines.push_back(sv.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }
  if (lines.size() < 2) throw cache_error("truncated cache file");

  // header
  std::string_view header = lines[0];
  const std::string_view magic = "WPVOL-CACHE ";
  if (header.substr(0, magic.size()) != magic)
    throw cache_error("bad header", 1);
  std::string_view rest = header.substr(magic.size());
  size_t sp = rest.find(' ');
  if (sp == std::string_view::npos) throw cache_error("bad header", 1);
  if (rest.substr(0, sp) != "1")
    throw cache_error("unsupported format version '" +
                          std::string(rest.substr(0, sp)) + "'",
                      1);
  std::string_view convfield = rest.substr(sp + 1);
  Convention conv;
  if (convfield == "convention=paper")
    conv = Convention::paper;
  else if (convfield == "convention=half")
    conv = Convention::half;
  else
    throw cache_error("bad convention field '" + std::string(convfield) + "'", 1);
  if (expected && conv != *expected)
    throw cache_error(std::string("convention mismatch: file has ") +
                          convention_name(conv) + ", engine wants " +
                          convention_name(*expected),
                      1);

  // footer + checksum over everything before it
  std::string_view footer = lines.back();
  const std::string_view fmagic = "#sha256 ";
  if (footer.substr(0, fmagic.size()) != fmagic)
    throw cache_error("missing checksum footer", lines.size());
  size_t body_len = bytes.size() - (footer.size() + 1);
  std::string want = sha256_hex(std::string_view(bytes).substr(0, body_len));
  if (footer.substr(fmagic.size()) != want)
    throw cache_error("checksum mismatch", lines.size());

  CoeffTable table(conv);
  for (size_t li = 1; li + 1 < lines.size(); ++li) {
    size_t line_no = li + 1;
    std::string_view line = lines[li];
    size_t bar1 = line.find(" | ");
    // "g n |" with an empty index list never occurs (n >= 1)
    if (bar1 == std::string_view::npos) throw cache_error("malformed line", line_no);
    size_t bar2 = line.find(" | ", bar1 + 3);
    if (bar2 == std::string_view::npos) throw cache_error("malformed line", line_no);

    auto parse_uints = [line_no](std::string_view sv) {
      std::vector<unsigned> out;
      size_t pos = 0;
      while (pos < sv.size()) {
        size_t sp2 = sv.find(' ', pos);
        std::string_view tok =
            sv.substr(pos, sp2 == std::string_view::npos ? sv.size() - pos : sp2 - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
          throw cache_error("bad integer '" + std::string(tok) + "'", line_no);
        out.push_back(static_cast<unsigned>(std::stoul(std::string(tok))));
        if (sp2 == std::string_view::npos) break;
        pos = sp2 + 1;
      }
      return out;
    };

    std::vector<unsigned> gn = parse_uints(line.substr(0, bar1));
    if (gn.size() != 2) throw cache_error("malformed signature", line_no);
    Signature sig{gn[0], gn[1]};
    if (!sig.valid()) throw cache_error("invalid signature", line_no);

    MultiIndex key = parse_uints(line.substr(bar1 + 3, bar2 - bar1 - 3));
    if (key.size() != sig.n) throw cache_error("index arity mismatch", line_no);
    if (!is_sorted_desc(key)) throw cache_error("index not sorted descending", line_no);
    if (mi_sum(key) > sig.degree())
      throw cache_error("index exceeds degree bound", line_no);

    PiPoly value;
    try {
      value = PiPoly::parse_cache(line.substr(bar2 + 3));
    } catch (const std::exception& e) {
      throw cache_error(std::string("bad value: ") + e.what(), line_no);
    }
    // homogeneity: a single positive monomial of pi-degree 3g-3+n-|alpha|
    if (!value.is_monomial() ||
        value.degree() != sig.degree() - mi_sum(key) ||
        value.terms().begin()->second.sign() <= 0)
      throw cache_error("value violates homogeneity/positivity", line_no);
    if (table.find(sig, key)) throw cache_error("duplicate key", line_no);
    table.insert(sig, key, std::move(value));
  }

  // a table is complete when every key in its degree box is present
  std::map<std::pair<unsigned, unsigned>, uint64_t> counts;
  table.for_each([&](Signature s, const MultiIndex&, const PiPoly&) {
    ++counts[{s.g, s.n}];
  });
  for (const auto& [gn, have] : counts) {
    Signature sig{gn.first, gn.second};
    if (have == CoeffTable::expected_key_count(sig)) table.mark_complete(sig);
  }
  return table;
}

}  // namespace wpvol
