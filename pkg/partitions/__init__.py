#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Set partitions and set partitions into lists inside the diagram algebra.

Main components:
    * SetPartition, b_of, partition_of - word symmetric functions
    * SetPartitionIntoLists, m_of, lists_of - biword symmetric functions
    * wsym_product_oracle, bwsym_product_oracle - products without diagrams
"""

from .SetPartitions import (
    PartitionError,
    SetPartition,
    SetPartitionIntoLists,
    PartitionTensor,
    std,
    is_indivisible,
    b_of,
    partition_of,
    wsym_product_oracle,
    wsym_product_via_diagrams,
    wsym_coproduct,
    m_of,
    m_of_permutation,
    lists_of,
    bwsym_product_oracle,
    bwsym_product_via_diagrams,
    bwsym_coproduct,
    all_set_partitions,
    all_partitions_into_lists,
    enumerate_g21,
)

__all__ = [
    'PartitionError',
    'SetPartition',
    'SetPartitionIntoLists',
    'PartitionTensor',
    'std',
    'is_indivisible',
    'b_of',
    'partition_of',
    'wsym_product_oracle',
    'wsym_product_via_diagrams',
    'wsym_coproduct',
    'm_of',
    'm_of_permutation',
    'lists_of',
    'bwsym_product_oracle',
    'bwsym_product_via_diagrams',
    'bwsym_coproduct',
    'all_set_partitions',
    'all_partitions_into_lists',
    'enumerate_g21',
]

__version__ = '1.0.0'
__author__ = 'B-diagram Hopf algebra team'
