"""
Internationalization (i18n) Module
JSON-backed message catalogs for the command-line tables and error lines.

JSON reports are never localized; only the human-facing renderings go
through this module.
"""

import json
import locale
import logging
import os
from typing import Dict, List, Optional

from utils.config import get_settings

logger = logging.getLogger(__name__)


class I18n:
    """
    Loads one language catalog and formats messages from it.

    Usage:
        i18n = I18n('tr')
        print(i18n.t('verdict_holds'))
    """

    SUPPORTED_LANGUAGES = ['en', 'tr']
    DEFAULT_LANGUAGE = 'en'

    def __init__(self, language: Optional[str] = None, locales_dir: Optional[str] = None):
        """
        Args:
            language: Language code; detected from settings or the system
                locale when omitted
            locales_dir: Directory of <language>.json files, defaults to
                'locales' next to this file
        """
        if locales_dir is None:
            locales_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'locales')
        self._locales_dir = locales_dir
        self._translations: Dict[str, str] = {}
        self._current_language = self.DEFAULT_LANGUAGE
        self.load(language or self._detect_language())

    def _detect_language(self) -> str:
        configured = get_settings().language
        if configured:
            return configured
        try:
            system_locale = locale.getlocale()[0]
            if system_locale:
                code = system_locale.split('_')[0].lower()
                if code in self.SUPPORTED_LANGUAGES:
                    return code
        except ValueError:
            pass
        return self.DEFAULT_LANGUAGE

    def load(self, language: str) -> bool:
        """
        Load the catalog for `language`, falling back to the default language.

        Returns:
            True if the requested catalog was loaded
        """
        if language not in self.SUPPORTED_LANGUAGES:
            logger.warning("Unsupported language: %s, falling back to %s", language, self.DEFAULT_LANGUAGE)
            language = self.DEFAULT_LANGUAGE
        filepath = os.path.join(self._locales_dir, f'{language}.json')
        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                self._translations = json.load(f)
        except FileNotFoundError:
            logger.warning("Language file not found: %s", filepath)
            return False
        except json.JSONDecodeError as e:
            logger.warning("Invalid JSON in %s: %s", filepath, e)
            return False
        self._current_language = language
        logger.debug("Loaded language: %s", language)
        return True

    def t(self, key: str, **kwargs) -> str:
        """Translated string for `key` (the key itself when missing), formatted with kwargs."""
        value = self._translations.get(key, key)
        if kwargs:
            try:
                value = value.format(**kwargs)
            except (KeyError, ValueError):
                pass
        return value

    @property
    def current_language(self) -> str:
        return self._current_language

    @property
    def supported_languages(self) -> List[str]:
        return self.SUPPORTED_LANGUAGES.copy()

    def __repr__(self) -> str:
        return f"<I18n lang='{self._current_language}' keys={len(self._translations)}>"


# Global i18n instance
_global_i18n: Optional[I18n] = None


def get_i18n() -> I18n:
    """Get the global i18n instance, creating it if needed."""
    global _global_i18n
    if _global_i18n is None:
        _global_i18n = I18n()
    return _global_i18n


def set_language(language: str) -> I18n:
    """Replace the global instance with one for `language`."""
    global _global_i18n
    _global_i18n = I18n(language)
    return _global_i18n


def t(key: str, **kwargs) -> str:
    """Shortcut for get_i18n().t(key, **kwargs)."""
    return get_i18n().t(key, **kwargs)
