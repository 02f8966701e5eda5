class CorpusToolError(Exception):
    """Базовое исключение инструментов сборки корпуса."""

    def __init__(self, message: str):
        """Инициализация исключения.

        :param message: Сообщение об ошибке, которое будет отображаться.
        """
        self.message = message
        super().__init__(self.message)
