#include "edp/signs_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <string>

#include "edp/error.hpp"

namespace edp {

namespace {

std::uint64_t parse_field(const std::string& header, std::size_t& pos, const std::string& key) {
    if (header.compare(pos, key.size(), key) != 0) throw format_error("EDPSIGNS header: expected '" + key + "'");
    pos += key.size();
    std::uint64_t v = 0;
    const char* begin = header.data() + pos;
    const char* end = header.data() + header.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) throw format_error("EDPSIGNS header: bad value for '" + key + "'");
    // no leading zeros, no sign
    if (*begin == '0' && ptr - begin > 1) throw format_error("EDPSIGNS header: leading zero in '" + key + "'");
    pos = static_cast<std::size_t>(ptr - header.data());
    return v;
}

}  // namespace

void write_edpsigns(std::ostream& out, const SignSequence& signs) {
    out << "EDPSIGNS v1 start=" << signs.start() << " len=" << signs.size() << '\n';
    std::string line;
    line.reserve(kSignsPerLine + 1);
    const auto raw = signs.raw();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        line.push_back(raw[i] > 0 ? '+' : '-');
        if (line.size() == kSignsPerLine || i + 1 == raw.size()) {
            line.push_back('\n');
            out << line;
            line.clear();
        }
    }
}

void write_edpsigns(const std::filesystem::path& path, const SignSequence& signs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_edpsigns(out, signs);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

SignSequence read_edpsigns(std::istream& in) {
    const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    const auto eol = data.find('\n');
    if (eol == std::string::npos) throw format_error("EDPSIGNS: missing header line");
    const std::string header = data.substr(0, eol);

    const std::string magic = "EDPSIGNS v1 ";
    if (header.compare(0, magic.size(), magic) != 0) throw format_error("EDPSIGNS: bad magic");
    std::size_t pos = magic.size();
    const std::uint64_t start = parse_field(header, pos, "start=");
    if (pos >= header.size() || header[pos] != ' ') throw format_error("EDPSIGNS header: expected ' len='");
    ++pos;
    const std::uint64_t len = parse_field(header, pos, "len=");
    if (pos != header.size()) throw format_error("EDPSIGNS header: trailing bytes");
    if (start == 0) throw format_error("EDPSIGNS header: start must be >= 1");

    std::vector<std::int8_t> signs;
    signs.reserve(len);
    std::size_t column = 0;
    for (std::size_t i = eol + 1; i < data.size(); ++i) {
        const char ch = data[i];
        if (ch == '+' || ch == '-') {
            if (column == kSignsPerLine) throw format_error("EDPSIGNS: line longer than 80 signs");
            signs.push_back(ch == '+' ? 1 : -1);
            ++column;
        } else if (ch == '\n') {
            if (column == 0) throw format_error("EDPSIGNS: empty line");
            const bool last_line = i + 1 == data.size();
            if (column != kSignsPerLine && !last_line) throw format_error("EDPSIGNS: short line before end");
            column = 0;
        } else {
            throw format_error("EDPSIGNS: unexpected byte at offset " + std::to_string(i));
        }
    }
    if (column != 0) throw format_error("EDPSIGNS: final line not newline-terminated");
    if (signs.size() != len)
        throw format_error("EDPSIGNS: header says len=" + std::to_string(len) + " but found " +
                           std::to_string(signs.size()));
    return SignSequence(start, std::move(signs), 0);
}

SignSequence read_edpsigns(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_edpsigns(in);
}

}  // namespace edp
