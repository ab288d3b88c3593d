#pragma once

#include <ostream>
#include <string>

#include "kummerlab/counting.hpp"

namespace kummerlab {

enum class ReportFormat { Csv, Jsonl };

// Fixed schema; golden-file tested. Single-parameter models leave param2
// empty (CSV) or null (JSONL). Integers render exactly, never as floats.
const char* csv_header();
std::string csv_row(const CountReport& r);
std::string jsonl_row(const CountReport& r);

/// Streams reports to an ostream, emitting the CSV header once up front.
class ReportWriter {
public:
    ReportWriter(std::ostream& out, ReportFormat format) : out_(out), format_(format) {}
    void write(const CountReport& r);

private:
    std::ostream& out_;
    ReportFormat format_;
    bool header_done_ = false;
};

}  // namespace kummerlab
