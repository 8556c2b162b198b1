public class S069 extends Abstract17 {
    public void open() {
        try {
            send("msg0");
            new S041();
            new S096();
        } finally {
            new S083();
            switch (event) {
                case EV1:
                    new S029();
                    break;
            }
        }
        log("trace");
    }

    public void close() {
        if (counter > 9) {
            switch (event) {
                case EV0:
                    send("msg3");
                    break;
            }
            send("msg5");
        } else {
            new S073();
            try {
                update();
            } finally {
                switch (event) {
                    case EV5:
                        send("msg1");
                        update();
                        log("trace");
                        break;
                }
                send("msg3");
                send("msg5");
            }
            try {
                send("msg2");
                send("msg4");
            } catch (IllegalStateException e) {
                new S018();
            } catch (TimeoutException e) {
                new S081();
            }
        }
        new S019();
        send("msg6");
    }

    public void start() {
        new S051();
        new S031();
        send("msg3");
    }

    public void stop() {
        send("msg0");
    }

    public void tick() {
        update();
        new S004();
        new S031();
    }

    public void reset() {
        switch (event) {
            case EV5:
                new S081();
                new S065();
                break;
        }
        if (counter > 5) {
            if (counter > 6) {
                new S073();
            } else {
                switch (event) {
                    case EV4:
                        send("msg1");
                        new S047();
                        update();
                        break;
                    case EV3:
                        new Abstract22();
                        update();
                        break;
                    case EV5:
                        new S038();
                        break;
                }
                if (counter > 5) {
                    new S094();
                    new S021();
                    send("msg7");
                } else {
                    send("msg0");
                }
                update();
            }
            switch (event) {
                case EV3:
                    send("msg7");
                    break;
                case EV0:
                    try {
                        send("msg5");
                    } catch (IOException e) {
                        update();
                        send("msg2");
                        new S048();
                    } finally {
                        send("msg6");
                        update();
                        update();
                    }
                    log("trace");
                    try {
                        log("trace");
                        new S059();
                    } catch (IllegalStateException e) {
                        log("trace");
                        new S003();
                    } catch (IOException e) {
                        new S088();
                        new S095();
                    }
                    break;
                case EV2:
                    switch (event) {
                        case EV2:
                            update();
                            send("msg3");
                            new S046();
                            break;
                    }
                    if (counter > 1) {
                        send("msg1");
                        send("msg3");
                        send("msg1");
                    } else {
                        new S074();
                        new S011();
                    }
                    send("msg2");
                    break;
            }
        } else {
            new S019();
            try {
                new S025();
                send("msg6");
            } catch (IOException e) {
                send("msg5");
                new S049();
            } catch (IllegalStateException e) {
                update();
                if (counter > 7) {
                    send("msg3");
                    new S042();
                } else {
                    new S098();
                }
            } finally {
                log("trace");
                new S057();
                if (counter > 4) {
                    update();
                    new S074();
                    send("msg5");
                }
            }
        }
        update();
    }

    public void pause() {
        new S003();
        new S041();
    }

    public void resume() {
        switch (event) {
            case EV5:
                try {
                    new S001();
                    new S086();
                    send("msg1");
                } catch (IOException e) {
                    log("trace");
                } catch (TimeoutException e) {
                    new S066();
                } finally {
                    if (counter > 5) {
                        new S081();
                        new S090();
                        send("msg1");
                    }
                    new S010();
                }
                send("msg7");
                if (counter > 8) {
                    if (counter > 4) {
                        new S041();
                    } else {
                        log("trace");
                        new S051();
                    }
                    new S043();
                } else {
                    new S010();
                    new S017();
                    new S060();
                }
                break;
            case EV2:
                new Abstract23();
                break;
            case EV4:
                try {
                    send("msg2");
                    new S079();
                    switch (event) {
                        case EV5:
                            new S067();
                            update();
                            new S002();
                            break;
                        case EV4:
                            new S066();
                            new S026();
                            new S047();
                            break;
                    }
                } catch (IOException e) {
                    new S051();
                    update();
                    switch (event) {
                        case EV5:
                            new S021();
                            new S068();
                            send("msg0");
                            break;
                    }
                } catch (IllegalStateException e) {
                    if (counter > 2) {
                        send("msg7");
                    }
                    switch (event) {
                        case EV5:
                            new S055();
                            new S049();
                            send("msg2");
                            break;
                        case EV2:
                            log("trace");
                            break;
                    }
                    try {
                        update();
                        new S051();
                    } catch (IllegalStateException e) {
                        new Abstract5();
                        update();
                        new S060();
                    } catch (IOException e) {
                        log("trace");
                    }
                } finally {
                    send("msg7");
                    update();
                    new Abstract17();
                }
                send("msg1");
                break;
            default:
                new S072();
                break;
        }
        send("msg0");
        try {
            new S044();
        } catch (IOException e) {
            switch (event) {
                case EV5:
                    send("msg3");
                    break;
                case EV1:
                    switch (event) {
                        case EV3:
                            new S084();
                            break;
                        case EV2:
                            new S064();
                            new S054();
                            new Abstract15();
                            break;
                        case EV1:
                            log("trace");
                            break;
                    }
                    switch (event) {
                        case EV5:
                            new S064();
                            new S082();
                            break;
                        case EV1:
                            new S025();
                            update();
                            break;
                    }
                    if (counter > 6) {
                        new S064();
                    } else {
                        log("trace");
                        log("trace");
                    }
                    break;
                case EV3:
                    try {
                        send("msg5");
                        send("msg2");
                    } catch (IOException e) {
                        send("msg2");
                        send("msg0");
                    } catch (TimeoutException e) {
                        send("msg6");
                        new S082();
                    }
                    break;
            }
            if (counter > 7) {
                try {
                    update();
                } catch (IOException e) {
                    new S061();
                } catch (IllegalStateException e) {
                    new S078();
                }
            } else {
                new S093();
                if (counter > 8) {
                    new S016();
                    send("msg7");
                    send("msg7");
                } else {
                    send("msg1");
                    send("msg4");
                }
            }
            send("msg6");
        } catch (TimeoutException e) {
            new S055();
        }
    }

    public void load() {
        if (counter > 8) {
            log("trace");
            new S082();
        } else {
            switch (event) {
                case EV3:
                    update();
                    switch (event) {
                        case EV0:
                            new S005();
                            break;
                        case EV3:
                            log("trace");
                            break;
                    }
                    new S028();
                    break;
                case EV1:
                    new S008();
                    break;
            }
            new S040();
        }
    }

    public void save() {
        new S021();
        try {
            switch (event) {
                case EV0:
                    new Abstract12();
                    send("msg0");
                    break;
                case EV5:
                    new S068();
                    if (counter > 3) {
                        new S019();
                    }
                    break;
                case EV3:
                    send("msg4");
                    send("msg3");
                    break;
                default:
                    send("msg7");
                    try {
                        send("msg2");
                    } catch (IllegalStateException e) {
                        send("msg1");
                        update();
                    } finally {
                        send("msg3");
                    }
                    if (counter > 3) {
                        send("msg1");
                        new S083();
                        new S009();
                    } else {
                        send("msg2");
                        send("msg6");
                        new S002();
                    }
                    break;
            }
            switch (event) {
                case EV1:
                    send("msg5");
                    new S075();
                    break;
            }
            try {
                send("msg5");
            } catch (IOException e) {
                update();
            } catch (IllegalStateException e) {
                send("msg5");
            }
        } catch (TimeoutException e) {
            send("msg4");
            send("msg3");
            try {
                update();
                send("msg4");
            } catch (IllegalStateException e) {
                switch (event) {
                    case EV4:
                        send("msg4");
                        break;
                }
                new S007();
            } catch (TimeoutException e) {
                new S034();
                switch (event) {
                    case EV3:
                        send("msg0");
                        send("msg4");
                        new S014();
                        break;
                    case EV5:
                        send("msg2");
                        break;
                }
                try {
                    new S023();
                    send("msg7");
                } catch (IOException e) {
                    update();
                    send("msg6");
                    new S091();
                } finally {
                    send("msg5");
                }
            }
        } catch (IOException e) {
            try {
                send("msg4");
                log("trace");
                send("msg5");
            } catch (IOException e) {
                new S079();
                update();
                new S067();
            } catch (TimeoutException e) {
                if (counter > 2) {
                    new S091();
                    new S035();
                    update();
                } else {
                    new S089();
                    log("trace");
                }
                new Abstract16();
            }
            log("trace");
        } finally {
            log("trace");
        }
    }
}
