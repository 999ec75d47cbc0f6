#pragma once

#include <stdexcept>
#include <string>

namespace treeconn {

// Bad arguments: unknown ids, malformed partitions, violated preconditions.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input outside an operation's domain (e.g. asking for a
// minimal tree-connected subgraph of two vertices in different components).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds an enumeration cap.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A proven invariant failed to hold; signals a bug, not a domain condition.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace treeconn
