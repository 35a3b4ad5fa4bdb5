#pragma once

#include "depthlab/bigint.hpp"
#include "depthlab/character_table.hpp"
#include "depthlab/cyclotomic.hpp"
#include "depthlab/depth.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/group_algebra.hpp"
#include "depthlab/group_spec.hpp"
#include "depthlab/induction.hpp"
#include "depthlab/matrix.hpp"
#include "depthlab/perm_group.hpp"
#include "depthlab/permutation.hpp"
#include "depthlab/symmetric_characters.hpp"
#include "depthlab/theorems.hpp"
