#include "proxcatch/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "proxcatch/errors.hpp"

namespace proxcatch {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

double parse_real(const std::string& field, const std::string& path, int lineno) {
    double v = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end)
        throw DomainError(path + ":" + std::to_string(lineno) + ": cannot parse number '" + field + "'");
    return v;
}

}  // namespace

std::vector<Point> read_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open point file: " + path);
    std::string line;
    int lineno = 0;
    std::vector<Point> pts;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            // Require the documented header so column mix-ups fail loudly.
            std::string lowered = line;
            for (char& ch : lowered) ch = static_cast<char>(std::tolower(ch));
            lowered.erase(std::remove_if(lowered.begin(), lowered.end(),
                                         [](char ch) { return ch == ' ' || ch == '\t'; }),
                          lowered.end());
            if (lowered != "x,y")
                throw DomainError(path + ":1: expected header 'x,y', got '" + line + "'");
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw DomainError(path + ":" + std::to_string(lineno) + ": expected 'x,y' row");
        const Point p(parse_real(line.substr(0, comma), path, lineno),
                      parse_real(line.substr(comma + 1), path, lineno));
        if (!is_finite(p))
            throw DomainError(path + ":" + std::to_string(lineno) + ": non-finite coordinates");
        pts.push_back(p);
    }
    if (!header_seen) throw DomainError(path + ": empty point file");
    return pts;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_text_atomic(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot write output file: " + path);
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw DomainError("failed writing output file: " + path);
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw DomainError("failed moving output into place: " + path);
    }
}

}  // namespace proxcatch
