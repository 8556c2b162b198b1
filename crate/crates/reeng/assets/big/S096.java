public class S096 extends State {
    public void open() {
        try {
            switch (event) {
                case EV2:
                    send("msg2");
                    new S010();
                    break;
                default:
                    if (counter > 6) {
                        new Abstract3();
                        new S045();
                    } else {
                        update();
                    }
                    new S046();
                    break;
            }
            new Abstract19();
        } catch (IllegalStateException e) {
            switch (event) {
                case EV0:
                    update();
                    break;
            }
        } catch (TimeoutException e) {
            update();
            new Abstract11();
        } finally {
            if (counter > 1) {
                switch (event) {
                    case EV5:
                        send("msg6");
                        break;
                }
                new S065();
            } else {
                send("msg7");
                update();
                send("msg2");
            }
            switch (event) {
                case EV1:
                    send("msg2");
                    send("msg0");
                    new S010();
                    break;
            }
        }
        new S069();
    }

    public void close() {
        new S022();
        switch (event) {
            case EV2:
                new S061();
                new S034();
                break;
            case EV3:
                new S071();
                switch (event) {
                    case EV2:
                        try {
                            new S002();
                            log("trace");
                            send("msg1");
                        } catch (IOException e) {
                            log("trace");
                            send("msg4");
                        } finally {
                            send("msg3");
                            new S036();
                            update();
                        }
                        send("msg7");
                        if (counter > 6) {
                            update();
                        } else {
                            send("msg3");
                            log("trace");
                        }
                        break;
                    case EV1:
                        new S093();
                        new S031();
                        break;
                    case EV3:
                        switch (event) {
                            case EV4:
                                send("msg1");
                                send("msg0");
                                send("msg3");
                                break;
                        }
                        send("msg6");
                        break;
                }
                log("trace");
                break;
        }
    }

    public void start() {
        new S092();
    }

    public void stop() {
        send("msg2");
        new S071();
        send("msg1");
    }

    public void tick() {
        new S079();
        switch (event) {
            case EV4:
                send("msg0");
                try {
                    switch (event) {
                        case EV4:
                            log("trace");
                            new S006();
                            send("msg0");
                            break;
                        default:
                            send("msg5");
                            break;
                    }
                } catch (IOException e) {
                    log("trace");
                }
                try {
                    new S098();
                    send("msg5");
                    new S028();
                } catch (IOException e) {
                    if (counter > 7) {
                        update();
                        log("trace");
                    }
                    try {
                        update();
                        update();
                    } catch (IOException e) {
                        send("msg4");
                        log("trace");
                        new S024();
                    }
                    update();
                } finally {
                    new S047();
                }
                break;
            case EV2:
                send("msg3");
                break;
        }
        new S068();
    }

    public void reset() {
        try {
            send("msg6");
            log("trace");
            switch (event) {
                case EV5:
                    new S024();
                    try {
                        new S017();
                        send("msg0");
                    } catch (TimeoutException e) {
                        log("trace");
                        send("msg1");
                    } catch (IllegalStateException e) {
                        update();
                    }
                    try {
                        new S005();
                        new S007();
                        update();
                    } catch (TimeoutException e) {
                        log("trace");
                        new Abstract18();
                    } catch (IOException e) {
                        log("trace");
                        new S055();
                    } finally {
                        send("msg6");
                        new S097();
                        update();
                    }
                    break;
                case EV4:
                    new S038();
                    new S053();
                    break;
            }
        } catch (TimeoutException e) {
            log("trace");
            new S029();
            try {
                log("trace");
            } catch (IOException e) {
                send("msg2");
            } catch (TimeoutException e) {
                update();
                log("trace");
                send("msg6");
            }
        } catch (IllegalStateException e) {
            new S031();
        } finally {
            new S008();
            if (counter > 3) {
                new S016();
                if (counter > 0) {
                    send("msg6");
                    new S091();
                } else {
                    new S095();
                }
            }
        }
    }

    public void pause() {
        new S068();
    }

    public void resume() {
        if (counter > 0) {
            send("msg2");
            send("msg6");
        }
    }

    public void load() {
        if (counter > 9) {
            send("msg3");
            try {
                switch (event) {
                    case EV0:
                        new S002();
                        send("msg0");
                        send("msg4");
                        break;
                    case EV3:
                        log("trace");
                        update();
                        new Abstract12();
                        break;
                }
            } catch (IllegalStateException e) {
                new S078();
            }
            try {
                update();
                send("msg6");
                switch (event) {
                    case EV2:
                        send("msg3");
                        new S085();
                        break;
                    case EV0:
                        send("msg6");
                        break;
                    case EV5:
                        new S041();
                        send("msg7");
                        new S014();
                        break;
                }
            } catch (TimeoutException e) {
                new S061();
                new S092();
                send("msg5");
            } catch (IOException e) {
                send("msg1");
                new S066();
            }
        } else {
            switch (event) {
                case EV3:
                    new Abstract11();
                    send("msg0");
                    new S066();
                    break;
            }
        }
        switch (event) {
            case EV0:
                log("trace");
                break;
        }
    }

    public void save() {
        switch (event) {
            case EV0:
                try {
                    if (counter > 0) {
                        send("msg6");
                    } else {
                        new S026();
                    }
                    new S021();
                } finally {
                    if (counter > 2) {
                        new S093();
                        send("msg1");
                        update();
                    }
                    send("msg4");
                    send("msg6");
                }
                try {
                    send("msg1");
                    new S050();
                } catch (IllegalStateException e) {
                    log("trace");
                    send("msg1");
                } catch (IOException e) {
                    new S060();
                } finally {
                    send("msg3");
                }
                try {
                    if (counter > 7) {
                        send("msg2");
                    } else {
                        update();
                    }
                    new S091();
                } catch (IllegalStateException e) {
                    send("msg0");
                } catch (IOException e) {
                    new S043();
                    switch (event) {
                        case EV0:
                            update();
                            new S004();
                            break;
                    }
                    if (counter > 0) {
                        new S005();
                        log("trace");
                        new S031();
                    }
                }
                break;
            case EV4:
                new S099();
                switch (event) {
                    case EV4:
                        new S000();
                        break;
                    case EV5:
                        send("msg3");
                        break;
                    case EV1:
                        try {
                            send("msg4");
                            send("msg4");
                            new S028();
                        } finally {
                            send("msg3");
                            send("msg5");
                            new S027();
                        }
                        if (counter > 4) {
                            new S084();
                        }
                        try {
                            log("trace");
                        } catch (IllegalStateException e) {
                            send("msg1");
                        } finally {
                            send("msg4");
                            log("trace");
                        }
                        break;
                }
                break;
        }
        send("msg5");
    }
}
