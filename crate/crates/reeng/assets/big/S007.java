public class S007 extends Abstract23 {
    public void open() {
        send("msg4");
    }

    public void close() {
        try {
            new S005();
            switch (event) {
                case EV2:
                    switch (event) {
                        case EV4:
                            send("msg4");
                            log("trace");
                            send("msg5");
                            break;
                        case EV1:
                            send("msg3");
                            new S012();
                            break;
                    }
                    send("msg6");
                    new Abstract3();
                    break;
                case EV4:
                    send("msg1");
                    break;
                case EV1:
                    try {
                        new S043();
                        log("trace");
                    } finally {
                        send("msg4");
                        send("msg1");
                    }
                    update();
                    update();
                    break;
                default:
                    send("msg7");
                    break;
            }
        } finally {
            try {
                new S067();
            } catch (IllegalStateException e) {
                if (counter > 8) {
                    send("msg1");
                    send("msg6");
                    new S067();
                } else {
                    send("msg0");
                    send("msg4");
                }
                send("msg6");
                send("msg0");
            } finally {
                switch (event) {
                    case EV1:
                        new S061();
                        break;
                }
            }
            new S045();
            send("msg5");
        }
        log("trace");
    }

    public void start() {
        new S026();
        new S054();
        switch (event) {
            case EV3:
                try {
                    try {
                        send("msg2");
                        update();
                        new S039();
                    } finally {
                        new S074();
                    }
                    new S030();
                } finally {
                    if (counter > 9) {
                        log("trace");
                    } else {
                        send("msg0");
                        update();
                    }
                    log("trace");
                    send("msg4");
                }
                switch (event) {
                    case EV4:
                        if (counter > 1) {
                            send("msg2");
                            send("msg7");
                        } else {
                            new Abstract15();
                            send("msg4");
                            new S039();
                        }
                        break;
                    case EV1:
                        if (counter > 7) {
                            new Abstract22();
                            new Abstract1();
                        }
                        try {
                            send("msg1");
                        } catch (TimeoutException e) {
                            send("msg6");
                            new S005();
                            new S064();
                        } finally {
                            new S035();
                            log("trace");
                        }
                        send("msg7");
                        break;
                    default:
                        if (counter > 8) {
                            send("msg5");
                        }
                        new S057();
                        break;
                }
                break;
            case EV2:
                new S064();
                new S048();
                try {
                    switch (event) {
                        case EV3:
                            log("trace");
                            new Abstract19();
                            break;
                        case EV4:
                            update();
                            break;
                        case EV5:
                            new S072();
                            send("msg4");
                            break;
                        default:
                            new S030();
                            break;
                    }
                } finally {
                    try {
                        log("trace");
                    } finally {
                        send("msg5");
                        update();
                    }
                }
                break;
            case EV5:
                send("msg2");
                break;
        }
    }

    public void stop() {
        if (counter > 2) {
            send("msg3");
            send("msg2");
            send("msg0");
        } else {
            send("msg4");
            new S001();
        }
        try {
            if (counter > 7) {
                send("msg5");
                new S050();
                if (counter > 9) {
                    send("msg6");
                    send("msg6");
                }
            }
        } catch (TimeoutException e) {
            if (counter > 3) {
                try {
                    update();
                    log("trace");
                    update();
                } catch (TimeoutException e) {
                    new S053();
                } catch (IOException e) {
                    new S034();
                }
                try {
                    new S007();
                    send("msg3");
                } catch (IllegalStateException e) {
                    new S067();
                    send("msg0");
                    send("msg3");
                } catch (TimeoutException e) {
                    update();
                }
                send("msg2");
            } else {
                update();
                update();
            }
            log("trace");
        }
        log("trace");
    }

    public void tick() {
        try {
            send("msg3");
        } catch (IllegalStateException e) {
            send("msg4");
            if (counter > 0) {
                new S061();
                new S060();
            }
            new S041();
        } catch (TimeoutException e) {
            new S054();
        } finally {
            try {
                try {
                    send("msg2");
                } catch (IllegalStateException e) {
                    new S039();
                } finally {
                    new Abstract4();
                    update();
                }
                send("msg3");
                switch (event) {
                    case EV0:
                        send("msg7");
                        send("msg3");
                        break;
                    case EV1:
                        new S084();
                        break;
                }
            } catch (IOException e) {
                try {
                    new S078();
                    send("msg5");
                    new S099();
                } catch (IllegalStateException e) {
                    new S015();
                } catch (IOException e) {
                    new S060();
                    send("msg5");
                    new S029();
                }
            } catch (TimeoutException e) {
                send("msg3");
            }
            log("trace");
            switch (event) {
                case EV1:
                    try {
                        send("msg0");
                        send("msg4");
                        send("msg1");
                    } finally {
                        log("trace");
                    }
                    send("msg1");
                    send("msg4");
                    break;
                case EV4:
                    new S058();
                    break;
            }
        }
        try {
            new S045();
        } catch (IOException e) {
            new S039();
            new S015();
        } catch (TimeoutException e) {
            update();
            new S071();
        } finally {
            send("msg4");
        }
        new S084();
    }

    public void reset() {
        new S020();
        new S034();
        send("msg1");
    }

    public void pause() {
        new S078();
        send("msg6");
        new S064();
    }

    public void resume() {
        update();
    }

    public void load() {
        switch (event) {
            case EV0:
                new S087();
                switch (event) {
                    case EV3:
                        update();
                        break;
                    case EV2:
                        new S060();
                        break;
                    case EV1:
                        send("msg1");
                        break;
                }
                break;
            case EV5:
                if (counter > 4) {
                    try {
                        new S018();
                    } catch (TimeoutException e) {
                        send("msg2");
                        send("msg5");
                    } catch (IllegalStateException e) {
                        send("msg7");
                        new S066();
                    }
                    new S008();
                    send("msg5");
                } else {
                    try {
                        log("trace");
                    } finally {
                        log("trace");
                        new Abstract2();
                        send("msg3");
                    }
                    if (counter > 2) {
                        new Abstract13();
                    }
                }
                break;
            case EV1:
                send("msg3");
                new S060();
                break;
        }
        try {
            switch (event) {
                case EV5:
                    switch (event) {
                        case EV1:
                            new S078();
                            break;
                        case EV2:
                            new S097();
                            new S090();
                            new Abstract5();
                            break;
                        case EV4:
                            new S073();
                            new S004();
                            break;
                    }
                    break;
                case EV0:
                    update();
                    break;
                case EV1:
                    send("msg5");
                    log("trace");
                    break;
                default:
                    log("trace");
                    break;
            }
            if (counter > 0) {
                send("msg5");
            }
            if (counter > 8) {
                if (counter > 1) {
                    update();
                }
                if (counter > 4) {
                    new S024();
                } else {
                    log("trace");
                    send("msg7");
                }
            }
        } finally {
            new S036();
        }
        try {
            switch (event) {
                case EV4:
                    if (counter > 7) {
                        send("msg3");
                    }
                    new S098();
                    send("msg5");
                    break;
                case EV1:
                    if (counter > 0) {
                        send("msg2");
                        new S001();
                    } else {
                        new S048();
                        send("msg1");
                    }
                    new Abstract14();
                    break;
                case EV0:
                    if (counter > 3) {
                        send("msg1");
                    }
                    try {
                        new S018();
                    } finally {
                        send("msg1");
                        new S070();
                    }
                    break;
            }
        } catch (IOException e) {
            new Abstract4();
        } catch (TimeoutException e) {
            try {
                send("msg1");
            } catch (IllegalStateException e) {
                new S068();
                switch (event) {
                    case EV4:
                        new S077();
                        break;
                    case EV3:
                        update();
                        send("msg3");
                        update();
                        break;
                    default:
                        new S078();
                        log("trace");
                        break;
                }
                if (counter > 1) {
                    new S087();
                    log("trace");
                }
            }
            if (counter > 5) {
                try {
                    send("msg5");
                    new S061();
                    new S072();
                } finally {
                    send("msg3");
                    send("msg5");
                    log("trace");
                }
                try {
                    new S092();
                    new S083();
                } catch (TimeoutException e) {
                    new S039();
                } catch (IllegalStateException e) {
                    log("trace");
                    new S007();
                }
            } else {
                send("msg5");
            }
            new S097();
        } finally {
            new S014();
        }
    }

    public void save() {
        try {
            try {
                send("msg7");
                try {
                    send("msg7");
                    new S064();
                    send("msg3");
                } catch (IOException e) {
                    new S005();
                } finally {
                    new S066();
                    new Abstract23();
                }
                send("msg6");
            } catch (TimeoutException e) {
                send("msg7");
                new S036();
            } finally {
                try {
                    new S080();
                    new S004();
                    new S005();
                } catch (TimeoutException e) {
                    send("msg3");
                    log("trace");
                    send("msg3");
                } catch (IllegalStateException e) {
                    send("msg3");
                    send("msg5");
                }
                try {
                    log("trace");
                } finally {
                    new S042();
                    send("msg6");
                }
            }
            new S031();
            new S083();
        } catch (TimeoutException e) {
            if (counter > 1) {
                send("msg1");
            } else {
                switch (event) {
                    case EV5:
                        new S035();
                        break;
                    default:
                        send("msg7");
                        new S050();
                        break;
                }
            }
            send("msg1");
            new S007();
        } catch (IllegalStateException e) {
            if (counter > 2) {
                send("msg7");
            } else {
                send("msg5");
            }
            update();
        }
        log("trace");
        if (counter > 5) {
            switch (event) {
                case EV2:
                    if (counter > 5) {
                        new S044();
                        send("msg3");
                        send("msg6");
                    } else {
                        send("msg1");
                        send("msg1");
                    }
                    break;
                default:
                    send("msg6");
                    break;
            }
            new S033();
            switch (event) {
                case EV0:
                    try {
                        send("msg7");
                    } catch (TimeoutException e) {
                        log("trace");
                        new S066();
                    } catch (IllegalStateException e) {
                        update();
                        send("msg2");
                    } finally {
                        send("msg7");
                        update();
                        send("msg2");
                    }
                    send("msg0");
                    if (counter > 9) {
                        new S003();
                        new S075();
                        new S077();
                    } else {
                        send("msg6");
                        update();
                    }
                    break;
                case EV4:
                    try {
                        update();
                        new Abstract8();
                        log("trace");
                    } finally {
                        new S005();
                        new S004();
                        new S047();
                    }
                    new S002();
                    break;
                case EV5:
                    send("msg2");
                    send("msg4");
                    try {
                        send("msg5");
                        new S004();
                        log("trace");
                    } finally {
                        send("msg7");
                        send("msg0");
                        send("msg1");
                    }
                    break;
                default:
                    new S025();
                    new S032();
                    break;
            }
        }
    }
}
