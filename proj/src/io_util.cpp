#include "cgbench/io_util.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cgbench/errors.hpp"

namespace cgbench {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(Err::IoError, "read failed on " + path);
    return buf.str();
}

}  // namespace

std::vector<Json> read_jsonl(const std::string& path) {
    std::string text = slurp(path);
    std::vector<Json> rows;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        Json row = Json::parse(line, nullptr, false);
        if (row.is_discarded())
            fail(Err::ParseError, path + ":" + std::to_string(lineno) + ": invalid JSON");
        rows.push_back(std::move(row));
    }
    return rows;
}

Json read_json_file(const std::string& path) {
    Json v = Json::parse(slurp(path), nullptr, false);
    if (v.is_discarded()) fail(Err::ParseError, path + ": invalid JSON");
    return v;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(Err::IoError, "cannot write " + tmp);
        out << content;
        out.flush();
        if (!out) fail(Err::IoError, "write failed on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        fail(Err::IoError, "cannot replace " + path);
    }
}

void write_jsonl_atomic(const std::string& path, const std::vector<Json>& rows) {
    std::string content;
    for (const Json& r : rows) {
        content += r.dump();
        content += '\n';
    }
    write_text_atomic(path, content);
}

void write_json_atomic(const std::string& path, const Json& value) {
    write_text_atomic(path, value.dump(2) + "\n");
}

}  // namespace cgbench
