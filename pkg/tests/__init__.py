"""Tests for condquant"""
