"""Алгоритмы раскраски графов пересечений боксов и поиска индуцированных деревьев"""
