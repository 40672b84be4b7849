#pragma once

#include <stdexcept>
#include <string>

#include "xcoh/catalog.hpp"

inline xcoh::DeskInstance desk(const std::string& name) {
  for (auto& d : xcoh::desk_instances())
    if (d.name == name) return d;
  throw std::out_of_range("no desk instance " + name);
}
