#include "torusphase/cli/format.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

namespace torusphase::cli {

std::string fmt_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc()) {
    throw std::runtime_error("fmt_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

CsvBuilder::CsvBuilder(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvBuilder::add_row(std::vector<std::string> cells) {
  rows_.push_back(std::move(cells));
}

std::string CsvBuilder::str() const {
  std::string out;
  const auto append_line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_line(header_);
  for (const auto& row : rows_) append_line(row);
  return out;
}

}  // namespace torusphase::cli
