#pragma once

// Everything in one include.
#include <superdual/rational.hpp>
#include <superdual/weight.hpp>
#include <superdual/partition.hpp>
#include <superdual/polyring.hpp>
#include <superdual/linalg.hpp>
#include <superdual/signed_permutation.hpp>
#include <superdual/symfunc.hpp>
#include <superdual/tableaux.hpp>
#include <superdual/glroots.hpp>
#include <superdual/superweyl.hpp>
#include <superdual/tensor.hpp>
#include <superdual/cinfty.hpp>
#include <superdual/tail_weight.hpp>
#include <superdual/verify.hpp>
