"""Shared error hierarchy and logging setup"""
